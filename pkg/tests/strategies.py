"""Hypothesis strategies shared by the test modules"""
from hypothesis import strategies as st

from src.models.graph import Graph
from src.models.transit import TransitFunction


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    """Random attachment tree plus extra edges, so every draw is connected"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = [(v, draw(st.integers(min_value=0, max_value=v - 1))) for v in range(1, n)]
    if n > 1:
        extra = draw(st.lists(
            st.tuples(st.integers(min_value=0, max_value=n - 1), st.integers(min_value=0, max_value=n - 1)),
            max_size=2 * n,
        ))
        edges += [(a, b) for a, b in extra if a != b]
    return Graph.from_edges(n, edges)


@st.composite
def transit_tables(draw, min_n=1, max_n=4):
    """Arbitrary total tables, not necessarily symmetric or expansive"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    table = draw(st.lists(st.integers(min_value=0, max_value=(1 << n) - 1), min_size=n * n, max_size=n * n))
    return TransitFunction(n, tuple(table))


@st.composite
def near_interval_functions(draw, min_n=2, max_n=5):
    """Interval function of a random connected graph with a few pair values enlarged"""
    from src.models.transit import interval_function
    g = draw(connected_graphs(min_n=min_n, max_n=max_n))
    r = interval_function(g)
    table = list(r.table)
    n = g.n
    for u, v in draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3)):
        extra = draw(st.integers(min_value=0, max_value=(1 << n) - 1))
        table[u * n + v] |= extra
        table[v * n + u] = table[u * n + v]
    return TransitFunction(n, tuple(table))
