"""Simple undirected graphs on vertices ``0..n-1`` and elementary queries.

Vertex sets are plain ``frozenset[int]`` objects (aliased as
:data:`VertexSet`), so the usual set algebra applies. Internally most
algorithms use integer bitmasks, available through :attr:`Graph.adj`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from ._bits import iter_bits, mask_of
from .errors import GraphParseError, PreconditionError

VertexSet = frozenset

__all__ = [
    "Graph",
    "VertexSet",
    "Bipartition",
    "OddCycle",
    "as_vertex_set",
    "neighborhood",
    "closed_neighborhood",
    "is_independent",
    "is_bipartite",
    "parse_edge_list",
    "parse_graph6",
    "encode_graph6",
    "to_dot",
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_bipartite_graph",
    "labeled_graphs",
]


class Graph:
    """Immutable simple graph on the vertex set ``range(n)``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``. Duplicate
    edges collapse; self-loops and out-of-range endpoints raise
    :class:`~critsets.errors.PreconditionError`.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise PreconditionError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        pairs = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            pairs.add((u, v))
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = n
        self._edges = frozenset(pairs)
        self._nbrs = tuple(frozenset(s) for s in nbrs)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        """Build a graph from symmetric adjacency bitmasks."""
        n = len(masks)
        edges = [(u, v) for u in range(n) for v in iter_bits(masks[u] >> (u + 1) << (u + 1))]
        g = cls(n, edges)
        if g.adj != tuple(masks):
            raise PreconditionError("adjacency masks are not symmetric or contain loops")
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmask per vertex."""
        return tuple(mask_of(s) for s in self._nbrs)

    @cached_property
    def adjacency_lists(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples, handy for deterministic traversals."""
        return tuple(tuple(sorted(s)) for s in self._nbrs)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Return ``G[X]`` relabelled to ``0..|X|-1`` plus the map back to ``G``.

        ``index_map[i]`` is the original vertex that became vertex ``i``.
        """
        index_map = tuple(sorted(set(vertices)))
        pos = {v: i for i, v in enumerate(index_map)}
        edges = [(pos[u], pos[v]) for u, v in self._edges if u in pos and v in pos]
        return Graph(len(index_map), edges), index_map

    def remove_vertices(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self._n) if v not in drop)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.sorted_edges()})"


def as_vertex_set(g: Graph, x: Iterable[int]) -> VertexSet:
    """Validate that ``x`` lies inside ``V(g)`` and freeze it."""
    s = frozenset(x)
    bad = [v for v in s if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        raise PreconditionError(f"vertices {sorted(bad)} not in V(G) (n={g.n})")
    return s


def neighborhood(g: Graph, x: Iterable[int]) -> VertexSet:
    """Open neighborhood ``N(X)``: every vertex adjacent to some member of X.

    When X is not independent the result may intersect X.
    """
    out: set[int] = set()
    for v in as_vertex_set(g, x):
        out |= g.neighbors(v)
    return frozenset(out)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return g.neighbors(v) | {v}


def is_independent(g: Graph, x: Iterable[int]) -> bool:
    s = as_vertex_set(g, x)
    return all(not (g.neighbors(v) & s) for v in s)


@dataclass(frozen=True)
class Bipartition:
    """A proper 2-colouring; ``left`` holds colour 0."""

    left: VertexSet
    right: VertexSet

    bipartite = True


@dataclass(frozen=True)
class OddCycle:
    """A closed walk ``cycle[0] - cycle[1] - ... - cycle[-1] - cycle[0]`` of odd length."""

    cycle: tuple[int, ...]

    bipartite = False


def is_bipartite(g: Graph) -> Bipartition | OddCycle:
    """2-colour ``g`` by BFS or return an odd cycle proving it impossible.

    Components are coloured in order of their smallest vertex, which gets
    colour 0.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    nbrs = g.adjacency_lists
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return OddCycle(_tree_cycle(parent, v, w))
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    return Bipartition(left, frozenset(range(g.n)) - left)


def _tree_cycle(parent: list[int], v: int, w: int) -> tuple[int, ...]:
    # v and w share a colour in a BFS forest, hence sit at equal depth.
    up_v, up_w = [v], [w]
    a, b = v, w
    while a != b:
        a, b = parent[a], parent[b]
        up_v.append(a)
        up_w.append(b)
    # both lists end with the common ancestor
    return tuple(up_v + up_w[-2::-1])


# --- text formats -----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n\\nu v\\nu v..."``. Blank lines are ignored, CRLF is accepted."""
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    n = None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not _is_int(parts[0]) or int(parts[0]) < 0:
                raise GraphParseError(f"expected vertex count, got {line!r}", lineno)
            n = int(parts[0])
            continue
        if len(parts) != 2 or not all(_is_int(p) for p in parts):
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex out of range 0..{n - 1}: {line!r}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop {line!r}", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphParseError("empty input, expected vertex count", 1)
    return Graph(n, edges)


def _is_int(s: str) -> bool:
    return s.lstrip("-").isdigit()


def _graph6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated graph6 size header")
        width, start = 6, 2
    else:
        if len(data) < 4:
            raise GraphParseError("truncated graph6 size header")
        width, start = 3, 1
    n = 0
    for b in data[start:start + width]:
        n = (n << 6) | (b - 63)
    return n, start + width


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph in graph6 format (optional ``>>graph6<<`` header)."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphParseError(f"byte {b!r} at offset {i} outside graph6 range 63..126")
    n, offset = _graph6_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[offset:]
    if len(body) != need:
        raise GraphParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    acc, nacc = 0, 0
    for j in range(1, n):
        nj = g.neighbors(j)
        for i in range(j):
            acc = (acc << 1) | (i in nj)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc, nacc = 0, 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out).decode("ascii")


_PALETTE = ("#6baed6", "#fd8d3c", "#74c476", "#9e9ac8", "#fdd0a2", "#e377c2")


def to_dot(g: Graph, highlights: Sequence[tuple[Iterable[int], str]] = ()) -> str:
    """Render ``g`` as Graphviz DOT, filling the vertices of each highlight set.

    A vertex in several sets takes the colour of the first one listed. The
    legend is written as comments so renderers ignore it.
    """
    sets = [(as_vertex_set(g, s), label) for s, label in highlights]
    fill: dict[int, str] = {}
    lines = []
    for i, (s, label) in enumerate(sets):
        colour = _PALETTE[i % len(_PALETTE)]
        lines.append(f"// {label}: {colour} {sorted(s)}")
        for v in s:
            fill.setdefault(v, colour)
    lines.append("graph G {")
    lines.append("  node [shape=circle];")
    for v in range(g.n):
        if v in fill:
            lines.append(f'  {v} [style=filled, fillcolor="{fill[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- small named families -----------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**(n choose 2)`` labelled graphs on ``n`` vertices.

    Graph number ``k`` contains pair ``i`` (pairs in lexicographic order)
    iff bit ``i`` of ``k`` is set.
    """
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in iter_bits(code)])
