import pytest
from hypothesis import given, settings

import oracles
from conftest import small_graphs
from critsets import (
    Graph,
    GraphParseError,
    PreconditionError,
    complete_graph,
    cycle_graph,
    encode_graph6,
    is_bipartite,
    is_independent,
    labeled_graphs,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    path_graph,
    to_dot,
)


def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(PreconditionError):
        Graph(3, [(1, 1)])
    with pytest.raises(PreconditionError):
        Graph(3, [(0, 3)])


def test_graph_symmetric_and_deduplicated():
    g = Graph(3, [(0, 1), (1, 0), (2, 1)])
    assert g.m == 2
    assert g.has_edge(1, 0) and g.has_edge(0, 1)
    assert g.adj == (0b010, 0b101, 0b010)


def test_induced_subgraph_index_map():
    sub, index = path_graph(5).induced_subgraph([4, 1, 2, 3])
    assert index == (1, 2, 3, 4)
    assert sub == path_graph(4)


def test_from_masks_roundtrip():
    g = cycle_graph(6)
    assert Graph.from_masks(g.adj) == g
    with pytest.raises(PreconditionError):
        Graph.from_masks([0b10, 0b00])


class TestEdgeList:
    def test_path(self):
        g = parse_edge_list("4\n0 1\n1 2\n2 3")
        assert g == path_graph(4)

    def test_single_vertex(self):
        g = parse_edge_list("1")
        assert g.n == 1 and g.m == 0

    def test_duplicates_collapse(self):
        g = parse_edge_list("3\n0 1\n0 1\n1 2\n0 2")
        assert g == complete_graph(3) and g.m == 3

    def test_crlf_and_blank_lines(self):
        assert parse_edge_list("3\r\n0 1\r\n\r\n1 2\r\n") == path_graph(3)

    @pytest.mark.parametrize(
        "text, line",
        [
            ("3\n0 1\n1 x", 3),
            ("3\n0 3", 2),
            ("3\n0 1\n2 2", 3),
            ("3\n0 1 2", 2),
            ("three", 1),
            ("", 1),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        with pytest.raises(GraphParseError) as info:
            parse_edge_list(text)
        assert info.value.line == line
        assert f"line {line}" in str(info.value)


class TestGraph6:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("@", Graph(1)),
            ("Bw", complete_graph(3)),
            ("Ch", path_graph(4)),
            ("?", Graph(0)),
        ],
    )
    def test_decode(self, text, expected):
        assert parse_graph6(text) == expected
        assert encode_graph6(expected) == text

    def test_header_and_newline(self):
        assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)

    def test_bad_byte(self):
        with pytest.raises(GraphParseError):
            parse_graph6("B\x7f")
        with pytest.raises(GraphParseError):
            parse_graph6("B!")

    def test_truncated(self):
        with pytest.raises(GraphParseError):
            parse_graph6("C")
        with pytest.raises(GraphParseError):
            parse_graph6("~??")

    def test_large_header(self):
        g = path_graph(70)
        text = encode_graph6(g)
        assert text[0] == "~"
        assert parse_graph6(text) == g

    @pytest.mark.parametrize("n", range(0, 6))
    def test_roundtrip_exhaustive(self, n):
        for g in labeled_graphs(n):
            assert parse_graph6(encode_graph6(g)) == g

    @settings(max_examples=200, deadline=None)
    @given(small_graphs(max_n=8))
    def test_roundtrip_n8(self, g):
        assert parse_graph6(encode_graph6(g)) == g


class TestNeighborhood:
    def test_examples(self, p4, k3):
        assert neighborhood(p4, {0}) == {1}
        assert neighborhood(p4, {0, 2}) == {1, 3}
        assert neighborhood(k3, set()) == frozenset()

    def test_out_of_range(self, p4):
        with pytest.raises(PreconditionError):
            neighborhood(p4, {4})

    @settings(max_examples=150, deadline=None)
    @given(small_graphs())
    def test_degree_bound_and_independence(self, g):
        for x in oracles.subsets(g.n):
            nx_ = neighborhood(g, x)
            assert nx_ == oracles.nbhd(g, x)
            assert len(nx_) <= sum(g.degree(v) for v in x)
            if oracles.independent(g, x):
                assert not nx_ & x


def test_is_independent(p4, k3):
    assert is_independent(p4, {0, 2})
    assert not is_independent(p4, {0, 1})
    assert is_independent(k3, set())


class TestBipartite:
    def test_path(self, p4):
        res = is_bipartite(p4)
        assert res.bipartite
        assert (res.left, res.right) == ({0, 2}, {1, 3})

    def test_single_vertex(self, k1):
        res = is_bipartite(k1)
        assert (res.left, res.right) == ({0}, frozenset())

    def test_c5_witness(self, c5):
        res = is_bipartite(c5)
        assert not res.bipartite
        assert len(res.cycle) == 5 and set(res.cycle) == set(range(5))

    @settings(max_examples=300, deadline=None)
    @given(small_graphs(max_n=8))
    def test_certificates(self, g):
        res = is_bipartite(g)
        has_odd = oracles.odd_cycle_counts(g)[1] > 0 if g.n <= 7 else None
        if res.bipartite:
            assert has_odd in (False, None)
            assert res.left | res.right == frozenset(range(g.n))
            assert all((u in res.left) != (v in res.left) for u, v in g.edges)
        else:
            assert has_odd in (True, None)
            cyc = res.cycle
            assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
            assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


class TestDot:
    def count_filled(self, text):
        return text.count("style=filled")

    def test_plain(self, k1):
        text = to_dot(k1)
        assert "graph G {" in text and self.count_filled(text) == 0
        assert "  0;" in text

    def test_corona_highlight(self, p4):
        text = to_dot(p4, [({0, 2, 3}, "corona")])
        assert self.count_filled(text) == 3
        assert "// corona" in text

    def test_empty_highlight(self, k3):
        assert self.count_filled(to_dot(k3, [(set(), "ker")])) == 0

    def test_first_listed_wins(self, p4):
        text = to_dot(p4, [({0}, "a"), ({0, 1}, "b")])
        lines = [line for line in text.splitlines() if line.startswith("  0 [")]
        assert "#6baed6" in lines[0]
        assert self.count_filled(text) == 2
