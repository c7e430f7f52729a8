import pytest
from hypothesis import strategies as st

from revdom.graph import builtin_graph, from_index_edges


@pytest.fixture
def g3():
    return builtin_graph("g3")


@pytest.fixture
def p3():
    return builtin_graph("p3")


@pytest.fixture
def k2():
    return builtin_graph("k2")


@pytest.fixture
def c4():
    return builtin_graph("c4")


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    if connected:
        # random spanning tree, then extra edges on top
        for i in range(1, n):
            edges.add((draw(st.integers(0, i - 1)), i))
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                edges.add((i, j))
    return from_index_edges(n, sorted(edges))


def brute_f(g, k):
    """F from the preimage description: a 0-vertex turns on iff it sees a 1-neighbor."""
    ones = {v for v in range(g.n) if (k >> (g.n - 1 - v)) & 1}
    on = {v for v in range(g.n) if v not in ones and any(u in ones for u in g.neighbors(v))}
    return sum(1 << (g.n - 1 - v) for v in on)
