import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublestar.decompose import cycles as cyc
from doublestar.decompose.cycles import CycleState, assign_cycle_pendants, push_forward, search_split
from doublestar.decompose.types import Decomposition
from doublestar.decompose.verify import verify_decomposition
from doublestar.errors import SearchBudgetExceeded
from doublestar.factorize import eulerian_orientation, two_factorization
from doublestar.generate import complete_graph, random_regular
from doublestar.graph import remove_edges


def _setting(g):
    factor = two_factorization(g)[0]
    return factor, eulerian_orientation(remove_edges(g, factor.edges))


def _valid_split(out, x):
    t = len(out)
    for j in range(t):
        y = set(out[(j + 1) % t]) - x[(j + 1) % t]
        if x[j] & y or not x[j] <= set(out[j]):
            return False
    return True


def test_k7_cycles_give_valid_stars():
    g = complete_graph(7)
    factor, orient = _setting(g)
    stars = []
    for c, es in zip(factor.cycles, factor.cycle_edges):
        a = assign_cycle_pendants(orient, c, 1, 1)
        stars.extend(a.stars(es))
    d = Decomposition(stars, {(1, 1)})
    assert len(stars) == 7 and verify_decomposition(g, d).valid


def test_shared_out_neighbour_conflict_is_pushed_forward():
    # v0 and v1 both point at 3; X_0 = {3} and Y_0 = {3} collide
    out = [{3: 10, 4: 11}, {3: 12, 5: 13}, {6: 14, 7: 15}]
    state = CycleState((0, 1, 2), out, [{3}, {5}, {6}])
    assert state.conflicts() == [(3, 0)]
    assert push_forward(state, 3, 0) == 1
    assert state.conflicts() == []
    assert state.x == [{3}, {3}, {6}]
    state.check(lambda j: 1, 1)


def test_push_chain_runs_several_steps():
    out = [{9: 0, 1: 1}, {9: 2, 2: 3}, {9: 4, 3: 5}, {4: 6, 5: 7}]
    state = CycleState((10, 11, 12, 13), out, [{9}, {2}, {3}, {4}])
    assert state.conflicts() == [(9, 0)]
    assert push_forward(state, 9, 0) == 2
    assert state.x == [{9}, {9}, {9}, {4}]
    state.check(lambda j: 1, 1)


def test_centre_in_pendant_set_is_reported():
    out = [{1: 0, 5: 1}, {6: 2, 7: 3}, {8: 4, 9: 5}]
    state = CycleState((0, 1, 2), out, [{1}, {6}, {8}])
    with pytest.raises(AssertionError):
        state.check()


def test_out_degree_mismatch_rejected():
    g = complete_graph(7)
    factor, orient = _setting(g)
    with pytest.raises(ValueError):
        assign_cycle_pendants(orient, factor.cycles[0], 1, 2)
    with pytest.raises(ValueError):
        assign_cycle_pendants(orient, factor.cycles[0], 0, 2)


def test_freeze_round_trip():
    g = complete_graph(9)
    factor, orient = _setting(g)
    a = assign_cycle_pendants(orient, factor.cycles[0], 2, 1)
    again = CycleState.from_assignment(a, factor.cycle_edges[0]).freeze()
    assert again == a


@settings(max_examples=60, deadline=None)
@given(st.sampled_from((6, 8, 10)), st.integers(0, 10_000), st.data())
def test_greedy_and_push_never_need_the_search(r, seed, data):
    n = data.draw(st.integers(r + 1, 24))
    g = random_regular(n, r, seed)
    factor, orient = _setting(g)
    k1 = data.draw(st.integers(1, r // 2 - 2))
    k2 = r // 2 - 1 - k1

    def forbidden(*args, **kwargs):
        raise AssertionError("exhaustive fallback was used")

    saved = cyc.search_split
    cyc.search_split = forbidden
    try:
        for c in factor.cycles:
            assign_cycle_pendants(orient, c, k1, k2)
    finally:
        cyc.search_split = saved


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_search_split_finds_valid_splits(seed):
    g = random_regular(11, 6, seed)
    factor, orient = _setting(g)
    for c in factor.cycles:
        out = [dict(orient.out_neighbors(v)) for v in c]
        x = search_split(out, 1)
        assert x is not None and _valid_split(out, x)
        x = search_split(out, 2) if all(len(o) >= 2 for o in out) else None
        assert x is None or _valid_split(out, x)


def test_search_budget():
    g = random_regular(13, 8, 1)
    factor, orient = _setting(g)
    out = [dict(orient.out_neighbors(v)) for v in factor.cycles[0]]
    # a budget of zero nodes cannot even place X_1
    with pytest.raises(SearchBudgetExceeded):
        search_split(out, 2, budget=0)
