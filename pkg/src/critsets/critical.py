"""Critical difference, critical independent sets, ker/diadem/nucleus and the
swap constructions that move between critical and maximum independent sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from ._bits import members
from .errors import BudgetExceeded, InvariantViolation, PreconditionError
from .graph import Graph, VertexSet, as_vertex_set, encode_graph6, is_independent, neighborhood
from .independence import alpha, first_maximum_independent_set
from .matching import hopcroft_karp

__all__ = [
    "CriticalReport",
    "SwapDecomposition",
    "set_difference_value",
    "critical_difference",
    "is_critical",
    "enumerate_critical_independent_sets",
    "critical_summary",
    "swap_decomposition",
    "family_decomposition",
    "extend_to_maximum",
]


def set_difference_value(g: Graph, x: Iterable[int]) -> int:
    """``|X| - |N(X)|`` for any vertex subset (independence not required)."""
    x = as_vertex_set(g, x)
    return len(x) - len(neighborhood(g, x))


def critical_difference(g: Graph) -> int:
    """``d(G)`` as the deficiency ``n - mu(B(G))`` of the bipartite double cover.

    Copy 0 of every vertex is matched against copy 1 of its neighbours, so
    this is one Hopcroft-Karp run on ``2n`` vertices and ``2m`` edges.
    """
    mate, _ = hopcroft_karp(g.adjacency_lists, g.n)
    return g.n - sum(1 for w in mate if w != -1)


def is_critical(g: Graph, x: Iterable[int], d: int | None = None) -> bool:
    """True when ``x`` is an independent set with difference ``d(G)``."""
    if d is None:
        d = critical_difference(g)
    return is_independent(g, x) and set_difference_value(g, x) == d


def _order_key(s: VertexSet) -> tuple[int, tuple[int, ...]]:
    return len(s), tuple(sorted(s))


def _critical_masks(adj: Sequence[int], n: int, d: int, budget: int) -> list[int]:
    found: list[int] = []

    def rec(chosen: int, size: int, nbh: int, cand: int) -> None:
        # extensions only add vertices of cand, N(X) never shrinks
        if size + cand.bit_count() - nbh.bit_count() < d:
            return
        if size - nbh.bit_count() == d:
            if len(found) == budget:
                raise BudgetExceeded("critical independent sets", budget)
            found.append(chosen)
        while cand:
            bit = cand & -cand
            v = bit.bit_length() - 1
            cand ^= bit
            rec(chosen | bit, size + 1, nbh | adj[v], cand & ~adj[v])

    rec(0, 0, 0, (1 << n) - 1)
    return found


def enumerate_critical_independent_sets(
    g: Graph, budget: int = 10**6, d: int | None = None
) -> Iterator[VertexSet]:
    """Yield every independent set attaining ``d(G)``, ordered by size and
    then lexicographically.

    The whole family is collected before the first yield, so an exceeded
    budget raises :class:`BudgetExceeded` before anything is emitted.
    """
    if budget < 1:
        raise PreconditionError("budget must be at least 1")
    if d is None:
        d = critical_difference(g)
    sets = [members(m) for m in _critical_masks(g.adj, g.n, d, budget)]
    sets.sort(key=_order_key)
    yield from sets


@dataclass(frozen=True)
class CriticalReport:
    """Critical difference and the sets built from critical independent sets.

    ``ker``/``diadem``/``nucleus``/``max_critical_size``/``critical_count``
    are ``None`` when the enumeration ran out of budget (``partial``).
    """

    d: int
    ker: VertexSet | None
    diadem: VertexSet | None
    nucleus: VertexSet | None
    max_critical_size: int | None
    critical_count: int | None
    partial: bool = False

    def to_json(self) -> dict:
        def arr(s):
            return None if s is None else sorted(s)

        return {
            "d": self.d,
            "ker": arr(self.ker),
            "diadem": arr(self.diadem),
            "nucleus": arr(self.nucleus),
            "max_critical_size": self.max_critical_size,
            "critical_count": self.critical_count,
            "partial": self.partial,
        }


def critical_summary(g: Graph, budget: int = 10**6) -> CriticalReport:
    """ker (intersection), diadem (union) and nucleus (intersection of the
    largest ones) over all critical independent sets."""
    d = critical_difference(g)
    try:
        sets = _critical_masks(g.adj, g.n, d, budget)
    except BudgetExceeded:
        return CriticalReport(d, None, None, None, None, None, partial=True)
    # the empty set is critical when d == 0, so `sets` is never empty
    ker = reduce(lambda a, b: a & b, sets)
    diadem = reduce(lambda a, b: a | b, sets)
    top = max(s.bit_count() for s in sets)
    nucleus = reduce(lambda a, b: a & b, (s for s in sets if s.bit_count() == top))
    return CriticalReport(d, members(ker), members(diadem), members(nucleus), top, len(sets))


@dataclass(frozen=True)
class SwapDecomposition:
    """``c = I_c & I_M``, ``a = I_c - c``, ``b = N(a) & I_M`` and the maximum
    independent set ``new_mis = (I_M - b) | a`` that contains ``I_c``."""

    c: VertexSet
    a: VertexSet
    b: VertexSet
    new_mis: VertexSet


def _require_critical(g: Graph, i_c: VertexSet, d: int) -> None:
    if not is_independent(g, i_c):
        raise PreconditionError(f"{sorted(i_c)} is not independent")
    if set_difference_value(g, i_c) != d:
        raise PreconditionError(f"{sorted(i_c)} is not critical (d(G)={d})")


def _require_maximum(g: Graph, s: VertexSet, a: int) -> None:
    if len(s) != a or not is_independent(g, s):
        raise PreconditionError(f"{sorted(s)} is not a maximum independent set (alpha={a})")


def _violation(g: Graph, what: str, **sets) -> InvariantViolation:
    witness = {"graph6": encode_graph6(g)}
    witness.update({k: sorted(v) for k, v in sets.items()})
    return InvariantViolation(what, witness)


def swap_decomposition(
    g: Graph,
    i_c: Iterable[int],
    i_m: Iterable[int],
    *,
    d: int | None = None,
    alpha_value: int | None = None,
) -> SwapDecomposition:
    """Split a critical independent set against a maximum one and swap.

    With ``C = I_c & I_M``, ``A = I_c - C`` and ``B = N(A) & I_M`` this
    checks ``|A| == |B|``, that ``(I_M - B) | A`` is again maximum and
    contains ``I_c``, and that ``C`` is critical. A failed check raises
    :class:`InvariantViolation`. ``d`` and ``alpha_value`` may be passed
    to skip recomputation.
    """
    i_c = as_vertex_set(g, i_c)
    i_m = as_vertex_set(g, i_m)
    d = critical_difference(g) if d is None else d
    a_num = alpha(g) if alpha_value is None else alpha_value
    _require_critical(g, i_c, d)
    _require_maximum(g, i_m, a_num)

    c = i_c & i_m
    a = i_c - c
    b = neighborhood(g, a) & i_m
    new_mis = (i_m - b) | a
    sets = dict(i_c=i_c, i_m=i_m, c=c, a=a, b=b, new_mis=new_mis)
    if len(a) != len(b):
        raise _violation(g, "|A| != |B| in swap decomposition", **sets)
    if len(new_mis) != a_num or not is_independent(g, new_mis):
        raise _violation(g, "(I_M - B) | A is not a maximum independent set", **sets)
    if set_difference_value(g, c) != d:
        raise _violation(g, "C = I_c & I_M is not critical", **sets)
    if not i_c <= new_mis:
        raise _violation(g, "swapped set does not contain I_c", **sets)
    return SwapDecomposition(c, a, b, new_mis)


def family_decomposition(
    g: Graph,
    i_c: Iterable[int],
    family: Sequence[Iterable[int]],
    *,
    d: int | None = None,
    alpha_value: int | None = None,
) -> tuple[VertexSet, VertexSet, VertexSet]:
    """``C = I_c & union(F)``, ``A = I_c - C``, ``B = N(A) & intersection(F)``
    for a non-empty family ``F`` of maximum independent sets; checks
    ``|A| == |B|``."""
    if not family:
        raise PreconditionError("family must be non-empty")
    i_c = as_vertex_set(g, i_c)
    fam = [as_vertex_set(g, s) for s in family]
    d = critical_difference(g) if d is None else d
    a_num = alpha(g) if alpha_value is None else alpha_value
    _require_critical(g, i_c, d)
    for s in fam:
        _require_maximum(g, s, a_num)

    union = frozenset().union(*fam)
    inter = frozenset.intersection(*fam)
    c = i_c & union
    a = i_c - c
    b = neighborhood(g, a) & inter
    if len(a) != len(b):
        raise _violation(
            g, "|A| != |B| in family decomposition", i_c=i_c, c=c, a=a, b=b,
            family=[tuple(sorted(s)) for s in fam],
        )
    return c, a, b


def extend_to_maximum(g: Graph, i_c: Iterable[int], *, d: int | None = None) -> VertexSet:
    """A maximum independent set containing the critical set ``i_c``.

    Built by swapping ``i_c`` into the lexicographically first maximum
    independent set.
    """
    i_c = as_vertex_set(g, i_c)
    d = critical_difference(g) if d is None else d
    _require_critical(g, i_c, d)
    base = first_maximum_independent_set(g)
    return swap_decomposition(g, i_c, base, d=d, alpha_value=len(base)).new_mis

