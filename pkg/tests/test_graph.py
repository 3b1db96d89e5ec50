import pytest
from hypothesis import given

from doublestar.errors import DuplicateEdgeError, SelfLoopError, UnknownEdgeIndexError, VertexOutOfRangeError
from doublestar.generate import circulant, complete_bipartite, complete_graph, cycle, petersen
from doublestar.graph import (
    PRODUCT_COPY_1,
    PRODUCT_COPY_2,
    SIDE_A,
    Graph,
    add_edges,
    bipartition,
    build_graph,
    cartesian_product_k2,
    common_neighbors,
    edge_subgraph,
    is_regular,
    is_triangle_free,
    remove_edges,
)

from strategies import graphs


def test_build_cycle():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.degrees() == [2, 2, 2, 2]
    assert g.endpoints(3) == (0, 3)
    assert is_regular(build_graph(2, [(0, 1)])) == 1


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(0, 0)], SelfLoopError),
        (3, [(0, 1), (1, 0)], DuplicateEdgeError),
        (3, [(0, 3)], VertexOutOfRangeError),
    ],
)
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_is_regular():
    assert is_regular(cycle(4)) == 2
    assert is_regular(build_graph(3, [(0, 1), (1, 2)])) is None
    assert is_regular(complete_graph(5)) == 4
    assert is_regular(Graph(0, {})) == 0


def test_bipartition_examples():
    b = bipartition(complete_bipartite(3, 3))
    assert len(b.a) == 3 and len(b.b) == 3
    assert bipartition(cycle(5)) is None
    empty = bipartition(Graph(4, {}))
    assert empty.side == (SIDE_A,) * 4


def test_bipartition_roots_lowest_vertex_on_side_a():
    g = build_graph(6, [(1, 2), (4, 5), (3, 4)])
    b = bipartition(g)
    assert b.side[0] == b.side[1] == b.side[3] == SIDE_A


def test_common_neighbors_and_triangles():
    assert common_neighbors(complete_graph(4), 0, 1) == {2, 3}
    assert is_triangle_free(cycle(6))
    assert is_triangle_free(petersen())
    assert not is_triangle_free(complete_graph(3))
    with pytest.raises(ValueError):
        common_neighbors(cycle(4), 1, 1)


def test_cartesian_product_examples():
    h, _ = cartesian_product_k2(build_graph(2, [(0, 1)]))
    assert h.n == 4 and is_regular(h) == 2 and bipartition(h) is not None
    prism, _ = cartesian_product_k2(cycle(3))
    assert (prism.n, prism.m) == (6, 9)
    hp, vmap = cartesian_product_k2(petersen())
    assert (hp.n, hp.m, is_regular(hp)) == (20, 40, 4)
    assert vmap.forward[13] == 3 and vmap.tags[13] == PRODUCT_COPY_2 and vmap.tags[3] == PRODUCT_COPY_1


def test_cartesian_product_edge_layout():
    g = build_graph(3, [(1, 2), (0, 1)])
    h, _ = cartesian_product_k2(g)
    m = g.m
    for pos, e in enumerate(g.edge_ids()):
        u, v = g.endpoints(e)
        assert h.endpoints(pos) == (u, v)
        assert h.endpoints(m + pos) == (u + 3, v + 3)
    assert [h.endpoints(2 * m + i) for i in range(3)] == [(0, 3), (1, 4), (2, 5)]


def test_remove_edges_examples():
    c4 = cycle(4)
    p4 = remove_edges(c4, [c4.edge_index(0, 3)])
    assert sorted(p4.degrees()) == [1, 1, 2, 2]
    assert remove_edges(c4, []) == c4
    k4 = complete_graph(4)
    c = remove_edges(k4, [k4.edge_index(0, 1), k4.edge_index(2, 3)])
    assert is_regular(c) == 2
    with pytest.raises(UnknownEdgeIndexError):
        remove_edges(c4, [99])


def test_edge_indices_survive_removal():
    g = complete_graph(5)
    h = remove_edges(g, [0, 3])
    assert set(h.edges) == set(g.edges) - {0, 3}
    assert all(h.endpoints(e) == g.endpoints(e) for e in h.edges)
    assert add_edges(h, {0: g.endpoints(0), 3: g.endpoints(3)}) == g
    assert edge_subgraph(g, [1, 2]).m == 2
    with pytest.raises(ValueError):
        add_edges(h, {1: (0, 1)})


def test_circulant_degree():
    assert is_regular(circulant(10, [1, 2, 5])) == 5
    assert is_regular(circulant(9, [1, 2, 3])) == 6


@given(graphs())
def test_graph_invariants(g):
    total = 0
    for v in range(g.n):
        for w, e in g.adjacency(v):
            assert set(g.endpoints(e)) == {v, w}
            assert (v, e) in g.adjacency(w)
        total += g.degree(v)
    assert total == 2 * g.m
    assert all(u < v for u, v in g.edges.values())


@given(graphs())
def test_bipartition_is_proper_or_odd_cycle(g):
    b = bipartition(g)
    if b is not None:
        assert all(b.side[u] != b.side[v] for u, v in g.edge_list())
    else:
        # an odd closed walk exists: some edge inside a BFS layer
        assert g.m >= 3


@given(graphs(max_n=7))
def test_product_doubles_and_adds_rungs(g):
    h, vmap = cartesian_product_k2(g)
    assert h.n == 2 * g.n and h.m == 2 * g.m + g.n
    for v in range(g.n):
        assert h.degree(v) == g.degree(v) + 1 == h.degree(v + g.n)
    assert len(vmap.forward) == h.n
