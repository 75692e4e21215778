import itertools

import pytest
from hypothesis import given, settings

import oracles
from conftest import small_graphs
from critsets import (
    BudgetExceeded,
    Graph,
    HallViolator,
    Matching,
    alpha,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_maximum_independent_sets,
    exists_matching_into,
    first_maximum_independent_set,
    is_bipartite,
    is_koenig_egervary,
    labeled_graphs,
    maximum_independent_set,
    omega_summary,
    path_graph,
)
from critsets.search import generate_gnp


@pytest.mark.parametrize(
    "g, a", [(cycle_graph(5), 2), (path_graph(4), 2), (empty_graph(6), 6), (Graph(0), 0)]
)
def test_alpha_examples(g, a):
    assert alpha(g) == a


def test_alpha_exhaustive_n6():
    for g in labeled_graphs(6):
        assert alpha(g) == oracles.alpha(g)


@pytest.mark.parametrize("seed", range(25))
def test_alpha_random_n11(seed):
    g = generate_gnp(11, [0.2, 0.5, 0.8][seed % 3], seed)
    s = maximum_independent_set(g)
    assert len(s) == alpha(g) == oracles.alpha(g)
    assert oracles.independent(g, s)


class TestEnumeration:
    def test_p4(self, p4):
        assert list(enumerate_maximum_independent_sets(p4)) == [{0, 2}, {0, 3}, {1, 3}]

    def test_c5(self, c5):
        assert list(enumerate_maximum_independent_sets(c5)) == [
            {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}
        ]

    def test_k1(self, k1):
        assert list(enumerate_maximum_independent_sets(k1)) == [{0}]

    def test_budget_signal(self, c5):
        it = enumerate_maximum_independent_sets(c5, budget=3)
        got = [next(it) for _ in range(3)]
        assert len(got) == 3
        with pytest.raises(BudgetExceeded):
            next(it)

    def test_budget_exact_fit(self, c5):
        assert len(list(enumerate_maximum_independent_sets(c5, budget=5))) == 5

    def test_first(self, p4):
        assert first_maximum_independent_set(p4) == {0, 2}

    @settings(max_examples=150, deadline=None)
    @given(small_graphs(max_n=8))
    def test_against_oracle(self, g):
        assert list(enumerate_maximum_independent_sets(g)) == oracles.maximum_independent_sets(g)


class TestOmegaSummary:
    def test_p4(self, p4):
        s = omega_summary(p4)
        assert s.core == frozenset() and s.corona == {0, 1, 2, 3}
        assert s.mis_count is None

    def test_star(self, k13):
        s = omega_summary(k13)
        assert s.core == s.corona == {1, 2, 3}

    def test_k3(self, k3):
        s = omega_summary(k3, count_budget=10)
        assert s.core == frozenset() and s.corona == {0, 1, 2}
        assert s.mis_count == 3

    def test_count_budget_exceeded(self, c5):
        s = omega_summary(c5, count_budget=2)
        assert s.mis_count is None and s.budget_exceeded

    def test_query_route_equals_enumeration_exhaustive_n6(self):
        for g in labeled_graphs(6):
            s = omega_summary(g)
            mis = list(enumerate_maximum_independent_sets(g))
            assert s.core == frozenset.intersection(*mis)
            assert s.corona == frozenset().union(*mis)
            assert s.core <= s.corona

    @settings(max_examples=100, deadline=None)
    @given(small_graphs(max_n=8))
    def test_query_route_n8(self, g):
        s = omega_summary(g)
        assert (s.core, s.corona) == oracles.core_corona(g)


@pytest.mark.parametrize(
    "g, ke", [(path_graph(4), True), (cycle_graph(5), False), (Graph(1), True), (complete_graph(2), True)]
)
def test_koenig_egervary_examples(g, ke):
    assert is_koenig_egervary(g) is ke


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=8))
def test_koenig_egervary_definition(g):
    assert is_koenig_egervary(g) == (oracles.alpha(g) + oracles.matching_number(g) == g.n)
    if is_bipartite(g).bipartite:
        assert is_koenig_egervary(g)


def test_maximum_criterion_exhaustive_n5():
    """S is maximum iff every independent set disjoint from S matches into S."""
    for g in itertools.chain(labeled_graphs(4), labeled_graphs(5)):
        a = oracles.alpha(g)
        ind = oracles.independent_sets(g)
        for s in ind:
            all_match = all(
                isinstance(exists_matching_into(g, j, s), Matching) for j in ind if not j & s
            )
            assert all_match == (len(s) == a)


def test_ke_matching_characterization_exhaustive_n6():
    """KE <=> every pair of maximum sets admits V-(S1|S2) -> S1&S2 <=> some pair does."""
    for n in range(1, 7):
        for g in labeled_graphs(n):
            mis = list(enumerate_maximum_independent_sets(g))
            full = frozenset(range(g.n))
            ok = [
                isinstance(exists_matching_into(g, full - (s1 | s2), s1 & s2), Matching)
                for s1 in mis
                for s2 in mis
            ]
            ke = is_koenig_egervary(g)
            assert all(ok) == ke
            assert any(ok) == ke


def test_hall_violator_on_non_ke():
    g = cycle_graph(5)
    s1, s2 = {0, 2}, {1, 3}
    res = exists_matching_into(g, {4}, frozenset(s1) & frozenset(s2))
    assert isinstance(res, HallViolator) and res.witness == {4}


@settings(max_examples=60, deadline=None)
@given(small_graphs(min_n=6, max_n=7))
def test_maximum_criterion_n7(g):
    a = oracles.alpha(g)
    ind = oracles.independent_sets(g)
    for s in ind:
        all_match = all(isinstance(exists_matching_into(g, j, s), Matching) for j in ind if not j & s)
        assert all_match == (len(s) == a)


@settings(max_examples=150, deadline=None)
@given(small_graphs(min_n=1, max_n=7))
def test_ke_matching_characterization_n7(g):
    mis = list(enumerate_maximum_independent_sets(g))
    full = frozenset(range(g.n))
    ok = [
        isinstance(exists_matching_into(g, full - (s1 | s2), s1 & s2), Matching)
        for s1 in mis
        for s2 in mis
    ]
    ke = is_koenig_egervary(g)
    assert all(ok) == ke == any(ok)
