import pytest
from hypothesis import strategies as st

from critsets import Graph, complete_graph, cycle_graph, path_graph, star_graph

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k13():
    return star_graph(3)


@pytest.fixture
def k1():
    return Graph(1)


@st.composite
def small_graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
