from __future__ import annotations

from hypothesis import given, settings
import pytest

from gm_switching.constructions import gadget9, m5_h, pair_involution
from gm_switching.errors import GraphError
from gm_switching.graph import Graph, Permutation, apply_permutation, build_grid, build_named, graph_from_edges
from gm_switching.isomorphism import (
    are_isomorphic,
    automorphism_group,
    is_isomorphism,
    isomorphism_fixing_set,
    iter_isomorphisms,
    iter_isomorphisms_fixing_set,
    orbits,
)
from gm_switching.scenarios import brute_force_automorphism_count, brute_force_isomorphism
from strategies import graphs, graphs_with_permutation


@settings(max_examples=80, deadline=None)
@given(graphs_with_permutation(max_n=10))
def test_relabeled_copy_is_found(case: tuple[Graph, Permutation]) -> None:
    g, p = case
    h = apply_permutation(g, p)
    witness = are_isomorphic(g, h)
    assert witness is not None
    assert is_isomorphism(g, h, witness)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_agrees_with_brute_force(g: Graph, h: Graph) -> None:
    assert (are_isomorphic(g, h) is None) == (brute_force_isomorphism(g, h) is None)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_automorphism_order_agrees_with_brute_force(g: Graph) -> None:
    group = automorphism_group(g)
    assert group.order == brute_force_automorphism_count(g)
    assert all(is_isomorphism(g, g, p) for p in group.generators)


def test_all_isomorphisms_are_enumerated() -> None:
    c5 = build_named("cycle", 5)
    found = list(iter_isomorphisms(c5, c5))
    assert len(found) == 10
    assert len(set(found)) == 10


def test_non_isomorphic_pairs() -> None:
    star = build_named("star", 4)
    c4_plus_k1 = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert are_isomorphic(star, c4_plus_k1) is None
    assert are_isomorphic(build_named("path", 3), build_named("path", 4)) is None
    assert not is_isomorphism(build_named("path", 3), build_named("path", 3), Permutation.identity(4))


def test_set_fixing_search() -> None:
    p4 = build_named("path", 4)
    witness = isomorphism_fixing_set(p4, p4, [0, 3])
    assert witness is not None and witness.image_of([0, 3]) == frozenset({0, 3})
    assert isomorphism_fixing_set(p4, p4, [0, 1]) is not None
    assert len(list(iter_isomorphisms_fixing_set(p4, p4, [0, 3]))) == 2
    assert len(list(iter_isomorphisms_fixing_set(p4, p4, [0]))) == 1
    with pytest.raises(GraphError):
        isomorphism_fixing_set(p4, p4, [4])


@pytest.mark.parametrize(
    ("g", "order", "orbit_partition"),
    [
        (build_named("cycle", 5), 10, ((0, 1, 2, 3, 4),)),
        (build_named("path", 4), 2, ((0, 3), (1, 2))),
        (build_named("star", 4), 24, ((0,), (1, 2, 3, 4))),
        (build_named("complete_bipartite", 2, 3), 12, ((0, 1), (2, 3, 4))),
        (build_named("empty", 4), 24, ((0, 1, 2, 3),)),
        (build_grid(3, 3), 72, (tuple(range(9)),)),
        (gadget9(), 3, ((0, 1, 2), (3, 4, 5), (6, 7, 8))),
    ],
)
def test_automorphism_groups(g: Graph, order: int, orbit_partition: tuple[tuple[int, ...], ...]) -> None:
    group = automorphism_group(g)
    assert group.order == order
    assert group.orbit_partition == orbit_partition


def test_trivial_group() -> None:
    asymmetric = graph_from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (4, 5), (3, 5)])
    group = automorphism_group(asymmetric)
    assert group.order == brute_force_automorphism_count(asymmetric)
    assert automorphism_group(Graph(0, ())).order == 1


def test_orbits_rejects_wrong_size() -> None:
    with pytest.raises(GraphError):
        orbits(build_named("path", 3), [Permutation.identity(4)])


def test_orbits_of_given_generators() -> None:
    c4 = build_named("cycle", 4)
    assert orbits(c4, [Permutation.identity(4)]) == ((0,), (1,), (2,), (3,))
    assert orbits(c4, [Permutation((1, 2, 3, 0))]) == ((0, 1, 2, 3),)
    assert orbits(build_named("empty", 10), [pair_involution(5)]) == tuple((2 * i, 2 * i + 1) for i in range(5))


def test_complete_graph_and_pair_orbits() -> None:
    assert automorphism_group(build_named("complete", 4)).order == 24
    assert automorphism_group(m5_h()).orbit_partition == tuple((2 * i, 2 * i + 1) for i in range(5))
