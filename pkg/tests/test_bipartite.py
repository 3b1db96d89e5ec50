from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublestar.decompose import (
    decompose_bipartite_degree_divisible,
    decompose_bipartite_divisible,
    decompose_bipartite_two_sizes,
    decompose_regular_bipartite,
    split_vertices,
    verify_decomposition,
)
from doublestar.errors import (
    BadShapeError,
    DegreeNotDivisibleError,
    DivisibilityViolatedError,
    NoValidSplitError,
    NotBipartiteError,
    NotRegularError,
)
from doublestar.generate import complete_bipartite, cycle, random_degree_multiple_bipartite
from doublestar.graph import SPLIT_CLONE, bipartition, build_graph, is_regular

from strategies import regular_bipartite


def _ok(g, d, expect):
    assert verify_decomposition(g, d).valid
    assert d.shape_counts() == Counter({tuple(sorted(k)): v for k, v in expect.items()})
    assert sum(s.size for s in d.stars) == g.m


def test_regular_bipartite_examples():
    k33 = complete_bipartite(3, 3)
    _ok(k33, decompose_regular_bipartite(k33, 1, 1), {(1, 1): 3})
    k44 = complete_bipartite(4, 4)
    _ok(k44, decompose_regular_bipartite(k44, 2, 1), {(2, 1): 4})
    with pytest.raises(BadShapeError):
        decompose_regular_bipartite(k33, 2, 2)
    with pytest.raises(NotBipartiteError):
        decompose_regular_bipartite(cycle(5), 1, 0)
    with pytest.raises(NotRegularError):
        decompose_regular_bipartite(build_graph(3, [(0, 1), (1, 2)]), 1, 1)


def test_star_centres_sit_on_opposite_sides():
    g = complete_bipartite(4, 4)
    d = decompose_regular_bipartite(g, 1, 2)
    b = bipartition(g)
    assert all(b.side[s.center1] == 0 and b.side[s.center2] == 1 for s in d.stars)


@settings(deadline=None)
@given(regular_bipartite(degrees=(3, 4, 5, 6)), st.data())
def test_regular_bipartite_property(gb, data):
    g, b = gb
    r = is_regular(g)
    k1 = data.draw(st.integers(1, r - 2))
    d = decompose_regular_bipartite(g, k1, r - 1 - k1, b)
    _ok(g, d, {(k1, r - 1 - k1): g.n // 2})


def test_divisible_examples():
    k66 = complete_bipartite(6, 6)
    _ok(k66, decompose_bipartite_divisible(k66, 1, 1), {(1, 1): 12})
    k33 = complete_bipartite(3, 3)
    assert decompose_bipartite_divisible(k33, 1, 1).stars == decompose_regular_bipartite(k33, 1, 1).stars
    with pytest.raises(DivisibilityViolatedError):
        decompose_bipartite_divisible(complete_bipartite(4, 4), 1, 1)


def test_two_sizes_examples():
    k77 = complete_bipartite(7, 7)
    _ok(k77, decompose_bipartite_two_sizes(k77, (1, 2), (1, 1)), {(1, 2): 7, (1, 1): 7})
    k66 = complete_bipartite(6, 6)
    _ok(k66, decompose_bipartite_two_sizes(k66, (1, 1), (1, 1)), {(1, 1): 12})
    with pytest.raises(NoValidSplitError):
        decompose_bipartite_two_sizes(complete_bipartite(3, 3), (1, 1), (1, 1))
    with pytest.raises(BadShapeError):
        decompose_bipartite_two_sizes(k66, (0, 2), (1, 1))


def test_split_vertices_identity_on_regular():
    g = complete_bipartite(3, 3)
    h, vmap = split_vertices(g, None, 3)
    assert h == g and vmap.forward == tuple(range(6))


def _hub_gadget():
    # vertex 0 (degree 6) and 1..4 (degree 3) on one side, 5..10 on the other
    edges = [(0, 5 + j) for j in range(6)]
    edges += [(1, 5), (1, 6), (1, 7), (2, 8), (2, 9), (2, 10), (3, 5), (3, 6), (3, 7), (4, 8), (4, 9), (4, 10)]
    return build_graph(11, edges)


def test_split_vertices_gadget():
    g = _hub_gadget()
    h, vmap = split_vertices(g, None, 3)
    assert is_regular(h) == 3 and h.n == 12
    assert vmap.forward.count(0) == 2
    assert [vmap.tags[i] for i, v in enumerate(vmap.forward) if v == 0] == [SPLIT_CLONE, SPLIT_CLONE]
    assert set(h.edges) == set(g.edges)
    with pytest.raises(DegreeNotDivisibleError):
        split_vertices(complete_bipartite(3, 4), None, 3)


def test_degree_divisible_examples():
    k33 = complete_bipartite(3, 3)
    assert decompose_bipartite_degree_divisible(k33, 1, 1).stars == decompose_regular_bipartite(k33, 1, 1).stars
    g = _hub_gadget()
    _ok(g, decompose_bipartite_degree_divisible(g, 1, 1), {(1, 1): 6})
    with pytest.raises(NotBipartiteError):
        decompose_bipartite_degree_divisible(cycle(5), 1, 1)


@settings(deadline=None, max_examples=30)
@given(st.sampled_from((3, 4)), st.integers(3, 9), st.integers(0, 10_000))
def test_degree_divisible_property(r, m, seed):
    g, b = random_degree_multiple_bipartite(max(m, r), r, seed)
    assert set(g.degrees()) <= {r, 2 * r, 3 * r}
    for k1 in range(1, r - 1):
        _ok(g, decompose_bipartite_degree_divisible(g, k1, r - 1 - k1, b), {(k1, r - 1 - k1): g.m // r})
