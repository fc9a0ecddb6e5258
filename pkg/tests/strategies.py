"""Hypothesis strategies for small graphs."""

from hypothesis import strategies as st

from hfree.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def trees(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return Graph.from_edges(n, [(p, v) for v, p in zip(range(1, n), parents)])
