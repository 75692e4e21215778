# Small helpers for int-as-bitset vertex sets. Bit v set <=> vertex v present.
from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1
