import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublestar.decompose import decompose_even_divisible, decompose_even_regular, verify_decomposition
from doublestar.errors import BadShapeError, DivisibilityViolatedError, NotEvenRegularError
from doublestar.factorize import two_factorization
from doublestar.generate import circulant, complete_graph, random_regular


@pytest.mark.parametrize("n, k1, k2", [(7, 1, 1), (9, 1, 2), (9, 2, 1), (11, 2, 2), (13, 1, 4)])
def test_complete_graphs(n, k1, k2):
    g = complete_graph(n)
    d = decompose_even_regular(g, k1, k2)
    assert verify_decomposition(g, d).valid and len(d) == n
    assert set(d.shape_counts()) == {tuple(sorted((k1, k2)))}


def test_central_edges_form_the_two_factor():
    g = complete_graph(9)
    factor = two_factorization(g)[1]
    d = decompose_even_regular(g, 1, 2, factor)
    assert {s.central_edge for s in d.stars} == factor.edges


def test_bad_inputs():
    with pytest.raises(BadShapeError):
        decompose_even_regular(complete_graph(5), 1, 1)
    with pytest.raises(BadShapeError):
        decompose_even_regular(complete_graph(7), 2, 0)
    with pytest.raises(NotEvenRegularError):
        decompose_even_regular(complete_graph(6), 1, 1)


@settings(deadline=None)
@given(st.sampled_from((6, 8, 10)), st.integers(0, 10_000), st.data())
def test_random_even_regular(r, seed, data):
    n = data.draw(st.integers(r + 1, 30))
    g = random_regular(n, r, seed)
    k1 = data.draw(st.integers(1, r // 2 - 2))
    d = decompose_even_regular(g, k1, r // 2 - 1 - k1)
    assert verify_decomposition(g, d).valid and len(d) == n


def test_even_divisible_examples():
    k13 = complete_graph(13)
    d = decompose_even_divisible(k13, 1, 1)
    assert verify_decomposition(k13, d).valid and len(d) == 26
    k7 = complete_graph(7)
    assert decompose_even_divisible(k7, 1, 1).stars == decompose_even_regular(k7, 1, 1).stars
    with pytest.raises(DivisibilityViolatedError):
        decompose_even_divisible(complete_graph(9), 1, 1)


def test_even_divisible_circulant():
    g = circulant(20, [1, 2, 3, 4, 5, 6])
    d = decompose_even_divisible(g, 1, 1)
    assert verify_decomposition(g, d).valid and len(d) == 40
