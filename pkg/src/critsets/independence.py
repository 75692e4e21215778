"""Independence number, maximum independent sets, core and corona."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ._bits import iter_bits, members
from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, VertexSet
from .matching import matching_number

__all__ = [
    "OmegaSummary",
    "alpha",
    "maximum_independent_set",
    "enumerate_maximum_independent_sets",
    "first_maximum_independent_set",
    "omega_summary",
    "is_koenig_egervary",
]


def _clique_cover(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy partition of ``cand`` into cliques.

    Returns vertices in colouring order together with the running number
    of cliques; an independent set inside the first ``i + 1`` vertices has
    at most ``bounds[i]`` members.
    """
    order: list[int] = []
    bounds: list[int] = []
    k = 0
    rest = cand
    while rest:
        k += 1
        q = rest
        while q:
            low = q & -q
            v = low.bit_length() - 1
            rest ^= low
            q &= adj[v]
            order.append(v)
            bounds.append(k)
    return order, bounds


def _cover_size(adj: Sequence[int], cand: int) -> int:
    k = 0
    rest = cand
    while rest:
        k += 1
        q = rest
        while q:
            low = q & -q
            rest ^= low
            q &= adj[low.bit_length() - 1]
    return k


def _greedy_independent(adj: Sequence[int], cand: int) -> int:
    chosen = 0
    while cand:
        v = min(iter_bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        chosen |= 1 << v
        cand &= ~(adj[v] | (1 << v))
    return chosen


def _max_independent(adj: Sequence[int], cand: int) -> int:
    """Bitmask of a maximum independent set inside ``cand``.

    Branch and bound: vertices are taken from the end of a greedy clique
    cover order and pruned when the cover bound cannot beat the incumbent.
    """
    best_set = _greedy_independent(adj, cand)
    best = best_set.bit_count()

    def expand(cand: int, size: int, chosen: int) -> None:
        nonlocal best, best_set
        order, bounds = _clique_cover(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            bit = 1 << v
            sub = cand & ~adj[v] & ~bit
            if sub:
                expand(sub, size + 1, chosen | bit)
            elif size + 1 > best:
                best, best_set = size + 1, chosen | bit
            cand &= ~bit

    if cand:
        expand(cand, 0, 0)
    return best_set


def _alpha_mask(adj: Sequence[int], cand: int) -> int:
    return _max_independent(adj, cand).bit_count()


def alpha(g: Graph) -> int:
    """Exact independence number."""
    return _alpha_mask(g.adj, (1 << g.n) - 1)


def maximum_independent_set(g: Graph) -> VertexSet:
    """Some maximum independent set (no ordering guarantee; see
    :func:`first_maximum_independent_set` for the lexicographic one)."""
    return members(_max_independent(g.adj, (1 << g.n) - 1))


def _enumerate_max(adj: Sequence[int], full: int, target: int) -> Iterator[int]:
    # include-before-exclude on the lowest candidate yields lexicographic order
    def rec(cand: int, chosen: int, size: int) -> Iterator[int]:
        if size == target:
            yield chosen
            return
        if size + cand.bit_count() < target or size + _cover_size(adj, cand) < target:
            return
        bit = cand & -cand
        v = bit.bit_length() - 1
        yield from rec(cand & ~adj[v] & ~bit, chosen | bit, size + 1)
        yield from rec(cand & ~bit, chosen, size)

    yield from rec(full, 0, 0)


def enumerate_maximum_independent_sets(g: Graph, budget: int = 10**6) -> Iterator[VertexSet]:
    """Yield every maximum independent set once, in lexicographic order of
    their sorted vertex tuples.

    Raises :class:`BudgetExceeded` when a ``budget + 1``-th set is found.
    """
    if budget < 1:
        raise PreconditionError("budget must be at least 1")
    adj = g.adj
    full = (1 << g.n) - 1
    target = _alpha_mask(adj, full)
    count = 0
    for mask in _enumerate_max(adj, full, target):
        count += 1
        if count > budget:
            raise BudgetExceeded("maximum independent sets", budget)
        yield members(mask)


def first_maximum_independent_set(g: Graph) -> VertexSet:
    """The lexicographically first maximum independent set."""
    adj = g.adj
    full = (1 << g.n) - 1
    return members(next(_enumerate_max(adj, full, _alpha_mask(adj, full))))


@dataclass(frozen=True)
class OmegaSummary:
    """Independence number with the intersection (core) and union (corona)
    of all maximum independent sets. ``mis_count`` is ``None`` unless
    enumeration was requested and finished within budget."""

    alpha: int
    core: VertexSet
    corona: VertexSet
    mis_count: int | None = None
    budget_exceeded: bool = False

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "core": sorted(self.core),
            "corona": sorted(self.corona),
            "mis_count": self.mis_count,
            "budget_exceeded": self.budget_exceeded,
        }


def omega_summary(g: Graph, count_budget: int | None = None) -> OmegaSummary:
    """Core and corona from ``n`` extra independence-number queries.

    ``v`` is in the core iff deleting it lowers alpha, and in the corona iff
    ``alpha(G - N[v]) == alpha - 1``. Pass ``count_budget`` to also count
    the maximum independent sets by enumeration.
    """
    adj = g.adj
    full = (1 << g.n) - 1
    a = _alpha_mask(adj, full)
    core, corona = set(), set()
    for v in range(g.n):
        bit = 1 << v
        if _alpha_mask(adj, full & ~bit) == a - 1:
            core.add(v)
        if _alpha_mask(adj, full & ~(adj[v] | bit)) == a - 1:
            corona.add(v)
    mis_count = None
    exceeded = False
    if count_budget is not None:
        try:
            mis_count = sum(1 for _ in enumerate_maximum_independent_sets(g, count_budget))
        except BudgetExceeded:
            exceeded = True
    return OmegaSummary(a, frozenset(core), frozenset(corona), mis_count, exceeded)


def is_koenig_egervary(g: Graph) -> bool:
    """``alpha(G) + mu(G) == n``."""
    return alpha(g) + matching_number(g) == g.n
