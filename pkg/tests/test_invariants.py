from __future__ import annotations

from hypothesis import given, settings
import pytest

from gm_switching.constructions import bipartite18, degree_change_instance, grid_four_cycle, m5, triangular_four_cycle
from gm_switching.errors import GraphError, SwitchingError
from gm_switching.graph import Graph, build_grid, build_named, build_triangular, graph_from_edges
from gm_switching.invariants import (
    Multiset,
    common_neighbors,
    has_complementary_rows,
    lambda_multiset,
    lambda_profile,
    lambda_within,
    lemma3_check,
    retained_neighbor_count,
    theorem4_hypothesis,
)
from gm_switching.isomorphism import are_isomorphic
from gm_switching.spectrum import cospectral
from gm_switching.switching import apply_switching_set, enumerate_switching_sets
from strategies import graphs

# center 0, legs 0-4-1, 0-5-2, 0-6-3
SPIDER = graph_from_edges(7, [(4, 0), (4, 1), (5, 0), (5, 2), (6, 0), (6, 3)])
SPIDER_SET = (0, 1, 2, 3)


def test_common_neighbors() -> None:
    c4 = build_named("cycle", 4)
    assert common_neighbors(c4, 0, 2) == 2
    assert common_neighbors(c4, 0, 1) == 0
    assert common_neighbors(c4, 3, 3) == 2
    assert lambda_within(c4, [0, 1, 2]) == Multiset((0, 0, 2))


def test_lambda_multiset_scopes() -> None:
    c4 = build_named("cycle", 4)
    assert lambda_multiset(c4, [0], "complement") == Multiset((0, 0, 2))
    assert lambda_multiset(c4, [0]) == Multiset((0, 0, 2, 2))
    assert len(lambda_multiset(c4, [0, 1])) == 4 + 1 + 2
    with pytest.raises(GraphError):
        lambda_multiset(c4, [])


def test_degree_change_certifies_non_isomorphism() -> None:
    switched = apply_switching_set(SPIDER, SPIDER_SET)
    report = lemma3_check(SPIDER, SPIDER_SET)
    assert report.degrees_before == Multiset((1, 1, 1, 3))
    assert report.degrees_after == Multiset((0, 2, 2, 2))
    assert report.cond_i and report.profile_changed and report.certifies_noniso
    assert not report.same_degree_on_x and not report.cond_iii
    assert cospectral(SPIDER, switched)
    assert are_isomorphic(SPIDER, switched) is None


def test_isomorphic_switches_certify_nothing() -> None:
    for g, x in (m5(), bipartite18(), degree_change_instance()):
        report = lemma3_check(g, x)
        assert not (report.cond_i or report.cond_ii or report.cond_iii)
        assert not report.certifies_noniso


def test_lemma3_requires_a_switching_set() -> None:
    with pytest.raises(SwitchingError):
        lemma3_check(build_named("path", 4), [0, 1, 2])


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=8))
def test_certificates_are_sound(g: Graph) -> None:
    for size in range(3, min(g.n, 5) + 1):
        for x in enumerate_switching_sets(g, size):
            if lemma3_check(g, x).certifies_noniso:
                assert are_isomorphic(g, apply_switching_set(g, x)) is None


def test_profile_of_regular_graph() -> None:
    assert lambda_profile(build_named("complete", 3)) == Multiset((1, 1, 1, 2, 2, 2))


def test_retained_neighbors() -> None:
    g, x = degree_change_instance()
    assert retained_neighbor_count(g, x, 0) == 1
    assert retained_neighbor_count(g, x, 3) == 1
    assert retained_neighbor_count(SPIDER, SPIDER_SET, 0) == 0
    with pytest.raises(SwitchingError):
        retained_neighbor_count(g, x, 4)


def test_complementary_rows() -> None:
    assert has_complementary_rows([[1, 0, 1], [0, 1, 0]])
    assert not has_complementary_rows([[1, 0], [1, 0], [1, 1]])
    assert not has_complementary_rows([])


def test_tensor_hypothesis_on_grids() -> None:
    path = build_named("path", 3)
    report = theorem4_hypothesis(build_grid(4, 3), grid_four_cycle(4, 3), path, 0, "tensor")
    assert report.same_degree_on_x and report.lambda_bar_invariant
    assert report.vertex_condition_tensor
    assert report.satisfied

    small = theorem4_hypothesis(build_grid(3, 2), grid_four_cycle(3, 2), path, 0, "tensor")
    assert not small.satisfied

    k2 = theorem4_hypothesis(build_grid(4, 3), grid_four_cycle(4, 3), build_named("complete", 2), 0, "tensor")
    assert not k2.vertex_condition_tensor and k2.vertex_condition_strengthened
    assert not k2.satisfied and k2.hypothesis_satisfied("strengthened")


def test_strengthened_hypothesis_on_triangular_graphs() -> None:
    k2 = build_named("complete", 2)
    assert theorem4_hypothesis(build_triangular(5), triangular_four_cycle(5), k2, 0, "strengthened").satisfied
    assert not theorem4_hypothesis(build_triangular(4), triangular_four_cycle(4), k2, 0, "strengthened").satisfied
    isolated = build_named("empty", 2)
    report = theorem4_hypothesis(build_triangular(5), triangular_four_cycle(5), isolated, 0, "strengthened")
    assert not report.vertex_condition_strengthened
    with pytest.raises(GraphError):
        theorem4_hypothesis(build_triangular(5), triangular_four_cycle(5), k2, 2, "strengthened")


def test_retained_neighbors_on_named_examples() -> None:
    assert retained_neighbor_count(build_grid(3, 2), grid_four_cycle(3, 2), 0) == 2
    g, x1 = m5()
    assert {retained_neighbor_count(g, x1, x) for x in x1} == {4}
    c4 = build_named("cycle", 4)
    assert retained_neighbor_count(c4, range(4), 0) == c4.degree(0)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_switching_leaves_the_outside_alone(g: Graph) -> None:
    for size in range(2, min(g.n, 5) + 1):
        for x in enumerate_switching_sets(g, size):
            switched = apply_switching_set(g, x)
            outside = [y for y in range(g.n) if y not in x]
            assert [switched.degree(y) for y in outside] == [g.degree(y) for y in outside]
            assert lambda_within(switched, outside) == lambda_within(g, outside)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_equal_degrees_on_x_keep_lambda_within_x(g: Graph) -> None:
    for size in range(2, min(g.n, 5) + 1):
        for x in enumerate_switching_sets(g, size):
            if len({g.degree(v) for v in x}) == 1:
                assert lambda_within(apply_switching_set(g, x), x) == lambda_within(g, x)


@given(graphs(min_n=1, max_n=9))
def test_lambda_multiset_splits_into_parts(g: Graph) -> None:
    for size in range(1, g.n + 1):
        x = range(size)
        degrees = Multiset.of(g.degree(v) for v in x)
        assert lambda_multiset(g, x) == lambda_multiset(g, x, "complement") + lambda_within(g, x) + degrees
