"""Simple-cycle enumeration and the odd-cycle counts used by the upper bound.

Every cycle lives inside one biconnected block, and a bipartite block has no
odd cycle, so the odd-cycle counts only enumerate non-bipartite blocks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BudgetExceeded, IndeterminateError, PreconditionError
from .graph import Graph, VertexSet, is_bipartite

__all__ = [
    "CycleInventory",
    "enumerate_cycles",
    "biconnected_blocks",
    "cycle_inventory",
    "is_almost_bipartite",
]


def _raw_cycles(nbrs: Sequence[Sequence[int]]) -> Iterator[tuple[int, ...]]:
    """Each simple cycle once, as (smallest vertex, smaller of its two
    neighbours on the cycle, ...)."""
    n = len(nbrs)
    for s in range(n):
        path = [s]
        on_path = 1 << s

        def extend(v: int) -> Iterator[tuple[int, ...]]:
            nonlocal on_path
            for w in nbrs[v]:
                if w <= s:
                    if w == s and len(path) >= 3 and path[1] < v:
                        yield tuple(path)
                    continue
                if on_path >> w & 1:
                    continue
                path.append(w)
                on_path |= 1 << w
                yield from extend(w)
                on_path &= ~(1 << w)
                path.pop()

        yield from extend(s)


def enumerate_cycles(g: Graph, budget: int = 10**6) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle of ``g`` exactly once as a vertex sequence.

    A cycle starts at its smallest vertex and continues towards the smaller
    of that vertex's two cycle neighbours. Raises :class:`BudgetExceeded`
    on finding cycle number ``budget + 1``.
    """
    if budget < 1:
        raise PreconditionError("budget must be at least 1")
    for count, cyc in enumerate(_raw_cycles(g.adjacency_lists), start=1):
        if count > budget:
            raise BudgetExceeded("cycles", budget)
        yield cyc


def biconnected_blocks(g: Graph) -> list[VertexSet]:
    """Vertex sets of the blocks that contain at least one edge."""
    n = g.n
    nbrs = g.adjacency_lists
    disc = [-1] * n
    low = [0] * n
    t = 0
    estack: list[tuple[int, int]] = []
    blocks: list[VertexSet] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(nbrs[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp: set[int] = set()
                    while True:
                        e = estack.pop()
                        comp.update(e)
                        if e == (u, v):
                            break
                    blocks.append(frozenset(comp))
    return blocks


def _odd_cycles(g: Graph) -> Iterator[tuple[int, ...] | None]:
    """Cycles of the non-bipartite blocks, relabelled to ``g``.

    Even cycles are yielded as ``None`` so that callers can charge every
    enumerated cycle against their budget.
    """
    for block in biconnected_blocks(g):
        if len(block) < 3:
            continue
        sub, index = g.induced_subgraph(block)
        if is_bipartite(sub).bipartite:
            continue
        for cyc in _raw_cycles(sub.adjacency_lists):
            yield tuple(index[v] for v in cyc) if len(cyc) % 2 else None


@dataclass(frozen=True)
class CycleInventory:
    """Odd-cycle counts.

    ``k_distinct`` counts distinct vertex sets among odd cycles, which is
    the largest family of odd cycles with pairwise different vertex sets.
    When ``exhausted`` is false both numbers are only lower bounds.
    """

    k_distinct: int
    odd_cycle_total: int
    exhausted: bool = True

    def to_json(self) -> dict:
        return {
            "k_distinct": self.k_distinct,
            "odd_cycle_total": self.odd_cycle_total,
            "exhausted": self.exhausted,
        }


def cycle_inventory(g: Graph, budget: int = 10**6) -> CycleInventory:
    """Count odd cycles and their distinct vertex sets.

    ``budget`` caps the number of cycles (odd or even) enumerated inside
    non-bipartite blocks.
    """
    if budget < 1:
        raise PreconditionError("budget must be at least 1")
    seen: set[int] = set()
    total = 0
    for count, cyc in enumerate(_odd_cycles(g), start=1):
        if count > budget:
            return CycleInventory(len(seen), total, exhausted=False)
        if cyc is None:
            continue
        total += 1
        mask = 0
        for v in cyc:
            mask |= 1 << v
        seen.add(mask)
    return CycleInventory(len(seen), total)


def is_almost_bipartite(g: Graph, budget: int = 10**6) -> bool:
    """True iff ``g`` has exactly one odd cycle.

    Raises :class:`IndeterminateError` if the budget runs out before a
    second odd cycle shows up.
    """
    if budget < 1:
        raise PreconditionError("budget must be at least 1")
    odd = 0
    for count, cyc in enumerate(_odd_cycles(g), start=1):
        if count > budget:
            raise IndeterminateError(f"cycle budget {budget} exhausted after {odd} odd cycle(s)")
        if cyc is not None:
            odd += 1
            if odd == 2:
                return False
    return odd == 1
