"""Maximum matchings (bipartite and general) and Hall-type matching tests."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import PreconditionError
from .graph import Bipartition, Graph, VertexSet, as_vertex_set

__all__ = [
    "Matching",
    "HallViolator",
    "hopcroft_karp",
    "max_matching_bipartite",
    "max_matching_general",
    "matching_number",
    "bipartite_double_cover",
    "exists_matching_into",
]


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges on ``n`` vertices.

    Calling the matching as ``M(v)`` gives the involution view: the partner
    of ``v``, or ``v`` itself when unmatched.
    """

    n: int
    pairs: frozenset[tuple[int, int]]
    _mate: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        mate = list(range(self.n))
        norm = set()
        for u, v in self.pairs:
            if u == v or mate[u] != u or mate[v] != v:
                raise PreconditionError(f"pair ({u}, {v}) is not disjoint from the others")
            mate[u], mate[v] = v, u
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "pairs", frozenset(norm))
        object.__setattr__(self, "_mate", tuple(mate))

    @classmethod
    def from_mate(cls, mate: Sequence[int]) -> Matching:
        """From a partner array where ``-1`` marks unmatched vertices."""
        return cls(len(mate), frozenset((u, w) for u, w in enumerate(mate) if w > u))

    def __call__(self, v: int) -> int:
        return self._mate[v]

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def is_matched(self, v: int) -> bool:
        return self._mate[v] != v

    def is_matching_of(self, g: Graph) -> bool:
        return self.n == g.n and all(g.has_edge(u, v) for u, v in self.pairs)


@dataclass(frozen=True)
class HallViolator:
    """Certificate ``W`` with ``|N(W) & U| < |W|``: no matching saturates W."""

    witness: VertexSet
    neighbors: VertexSet


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> tuple[list[int], list[int]]:
    """Maximum bipartite matching by shortest augmenting paths in phases.

    ``adj[u]`` lists the right-side neighbours of left vertex ``u``. Returns
    ``(mate_left, mate_right)`` with ``-1`` for unmatched vertices. Runs in
    O(E sqrt(V)); the search is iterative so deep paths are fine.
    """
    n_left = len(adj)
    mate_l = [-1] * n_left
    mate_r = [-1] * n_right
    for u in range(n_left):
        for v in adj[u]:
            if mate_r[v] == -1:
                mate_l[u] = v
                mate_r[v] = u
                break
    inf = n_left + 1
    while True:
        dist = [inf] * n_left
        queue = [u for u in range(n_left) if mate_l[u] == -1]
        for u in queue:
            dist[u] = 0
        limit = inf
        for u in queue:
            du = dist[u]
            if du >= limit:
                break
            for v in adj[u]:
                w = mate_r[v]
                if w == -1:
                    limit = du + 1
                elif dist[w] == inf:
                    dist[w] = du + 1
                    queue.append(w)
        if limit == inf:
            break
        ptr = [0] * n_left
        for root in range(n_left):
            if mate_l[root] != -1:
                continue
            stack = [root]
            via: list[int] = []
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                pushed = False
                while ptr[u] < len(nbrs):
                    v = nbrs[ptr[u]]
                    ptr[u] += 1
                    w = mate_r[v]
                    if w == -1:
                        if dist[u] + 1 != limit:
                            continue
                        via.append(v)
                        for x, y in zip(stack, via):
                            mate_l[x] = y
                            mate_r[y] = x
                        stack = []
                        pushed = True
                        break
                    if dist[w] == dist[u] + 1:
                        via.append(v)
                        stack.append(w)
                        pushed = True
                        break
                if not pushed:
                    dist[u] = inf
                    stack.pop()
                    if via:
                        via.pop()
    return mate_l, mate_r


def _check_bipartition(g: Graph, parts) -> tuple[list[int], list[int]]:
    if isinstance(parts, Bipartition):
        left, right = parts.left, parts.right
    else:
        left, right = (frozenset(p) for p in parts)
    if left & right or (left | right) != frozenset(range(g.n)):
        raise PreconditionError("parts must partition the vertex set")
    for u, v in g.edges:
        if (u in left) == (v in left):
            raise PreconditionError(f"edge ({u}, {v}) lies inside one part")
    return sorted(left), sorted(right)


def max_matching_bipartite(g: Graph, parts) -> Matching:
    """Maximum matching of a bipartite graph given a valid 2-colouring."""
    left, right = _check_bipartition(g, parts)
    rpos = {v: i for i, v in enumerate(right)}
    adj = [[rpos[w] for w in g.adjacency_lists[u]] for u in left]
    mate_l, _ = hopcroft_karp(adj, len(right))
    return Matching(g.n, frozenset((left[i], right[j]) for i, j in enumerate(mate_l) if j != -1))


def max_matching_general(g: Graph) -> Matching:
    """Maximum cardinality matching via Edmonds' blossom shrinking, O(n^3)."""
    n = g.n
    adj = g.adjacency_lists
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = _blossom_search(adj, match, root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return Matching.from_mate(match)


def _blossom_search(adj, match, root):
    """BFS for an augmenting path from ``root``; returns (free end or -1, parents)."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                b = lca(v, to)
                in_blossom = [False] * n
                mark(v, b, to, in_blossom)
                mark(to, b, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = b
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def matching_number(g: Graph) -> int:
    return max_matching_general(g).size


def bipartite_double_cover(g: Graph) -> tuple[Graph, Bipartition]:
    """The lift with vertex ``v`` as copy ``(v, 0)`` and ``n + v`` as ``(v, 1)``.

    ``(u, 0)`` is joined to ``(v, 1)`` exactly when ``uv`` is an edge of g.
    """
    n = g.n
    edges = [(u, n + v) for u, v in g.edges] + [(v, n + u) for u, v in g.edges]
    return Graph(2 * n, edges), Bipartition(frozenset(range(n)), frozenset(range(n, 2 * n)))


def exists_matching_into(g: Graph, s: Iterable[int], u: Iterable[int]) -> Matching | HallViolator:
    """Find a matching that saturates ``s`` using only vertices of ``u``.

    Returns the matching, or a :class:`HallViolator` ``W`` (a subset of
    ``s``) with fewer than ``|W|`` neighbours in ``u``. Augmenting paths
    are tried in increasing vertex order, so results are reproducible.
    """
    s = as_vertex_set(g, s)
    u = as_vertex_set(g, u)
    if s & u:
        raise PreconditionError(f"s and u overlap in {sorted(s & u)}")
    left = sorted(s)
    into = {x: [y for y in g.adjacency_lists[x] if y in u] for x in left}
    mate: dict[int, int] = {}  # u-vertex -> s-vertex

    def augment(x: int, seen: set[int]) -> bool:
        for y in into[x]:
            if y in seen:
                continue
            seen.add(y)
            if y not in mate or augment(mate[y], seen):
                mate[y] = x
                return True
        return False

    for x in left:
        if not augment(x, set()):
            return _hall_witness(x, into, mate)
    return Matching(g.n, frozenset((x, y) for y, x in mate.items()))


def _hall_witness(x: int, into, mate) -> HallViolator:
    # Everything alternating-reachable from the exposed vertex x.
    witness = {x}
    reached: set[int] = set()
    stack = [x]
    while stack:
        a = stack.pop()
        for y in into[a]:
            if y not in reached:
                reached.add(y)
                b = mate[y]
                if b not in witness:
                    witness.add(b)
                    stack.append(b)
    return HallViolator(frozenset(witness), frozenset(reached))
