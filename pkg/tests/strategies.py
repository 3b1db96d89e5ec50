"""Hypothesis strategies for small graphs."""

from itertools import combinations

from hypothesis import strategies as st

from doublestar.generate import random_one_factorable, random_regular, random_regular_bipartite
from doublestar.graph import build_graph


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def regular_graphs(draw, degrees=(2, 3, 4, 5, 6), max_n=14):
    r = draw(st.sampled_from(degrees))
    n = draw(st.integers(r + 1, max(r + 1, max_n)))
    if (n * r) % 2:
        n += 1
    return random_regular(n, r, draw(st.integers(0, 10_000)))


@st.composite
def regular_bipartite(draw, degrees=(1, 2, 3, 4, 5), max_m=10):
    r = draw(st.sampled_from(degrees))
    m = draw(st.integers(r, max(r, max_m)))
    return random_regular_bipartite(m, r, draw(st.integers(0, 10_000)))


@st.composite
def one_factorable(draw, degrees=(3, 5, 7), max_n=16):
    r = draw(st.sampled_from(degrees))
    n = draw(st.integers((r + 2) // 2, max_n // 2)) * 2
    return random_one_factorable(n, r, draw(st.integers(0, 10_000)))
