from __future__ import annotations

from hypothesis import given, settings

from gm_switching.graph import Graph, build_named, graph_from_edges
from gm_switching.scenarios import cofactor_char_poly
from gm_switching.spectrum import IntPolynomial, char_poly, cospectral
from strategies import graphs


def test_cycle_polynomial() -> None:
    assert char_poly(build_named("cycle", 4)).coeffs == (0, 0, -4, 0, 1)
    assert str(char_poly(build_named("cycle", 4))) == "x^4 - 4*x^2"


def test_empty_graph_polynomials() -> None:
    assert char_poly(Graph(0, ())).coeffs == (1,)
    assert char_poly(build_named("empty", 3)).coeffs == (0, 0, 0, 1)


def test_star_and_cycle_plus_vertex_are_cospectral() -> None:
    star = build_named("star", 4)
    c4_plus_k1 = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert char_poly(star) == char_poly(c4_plus_k1) == IntPolynomial((0, 0, 0, -4, 0, 1))
    assert cospectral(star, c4_plus_k1)
    assert not cospectral(star, build_named("path", 5))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_char_poly_matches_cofactor_expansion(g: Graph) -> None:
    poly = char_poly(g)
    assert poly == cofactor_char_poly(g)
    assert poly.is_monic() and poly.degree == g.n
    if g.n >= 2:
        assert poly.coeffs[g.n - 2] == -g.edge_count


def test_polynomial_helpers() -> None:
    p = IntPolynomial((1, 2, 3))
    assert p(2) == 17
    assert (p * IntPolynomial((0, 1))).coeffs == (0, 1, 2, 3)
    assert p.reflected().coeffs == (1, -2, 3)
    assert p.scaled(-1).to_strings() == ["-1", "-2", "-3"]
    assert str(IntPolynomial((-1, 0, 1))) == "x^2 - 1"
    assert str(IntPolynomial((0,))) == "0"
