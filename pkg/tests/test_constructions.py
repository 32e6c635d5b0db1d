from __future__ import annotations

import pytest

from gm_switching.constructions import (
    EXAMPLE27_GADGET_OFFSET,
    FIXTURE_NAMES,
    TournamentMatrix,
    all_transversals,
    bipartite18,
    bipartite18_phi,
    common_neighbor_triples,
    cyclic_tournament,
    degree_change_instance,
    example27,
    example27_phi,
    fixture,
    gadget9,
    grid_four_cycle,
    is_regular_tournament,
    m5,
    m5_h,
    pair_blowup,
    pair_involution,
    prop4_graph,
    prop4_witness,
    triangular_four_cycle,
    verify_prop4_hypothesis,
)
from gm_switching.errors import ConstructionError
from gm_switching.graph import build_named
from gm_switching.isomorphism import is_isomorphism
from gm_switching.scenarios import POST_SWITCH_TRIPLES, PRE_SWITCH_TRIPLES
from gm_switching.switching import apply_switching_set, is_switching_set

U_VERTICES = list(range(12, 18))


def test_tournaments() -> None:
    t = cyclic_tournament(5)
    assert t.order == 5 and t.is_regular()
    assert all(sum(row) == 2 for row in t.entries)
    assert is_regular_tournament([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert not is_regular_tournament([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    assert not is_regular_tournament([[0, 1], [1, 0]])
    with pytest.raises(ConstructionError):
        cyclic_tournament(4)
    with pytest.raises(ConstructionError):
        TournamentMatrix(((1,),))


def test_m5_is_isomorphic_through_the_block_witness() -> None:
    g, x1 = m5()
    assert g.n == 20 and set(g.degrees) == {9}
    assert x1 == frozenset(range(10))
    assert is_isomorphism(g, apply_switching_set(g, x1), prop4_witness(5))
    assert verify_prop4_hypothesis(m5_h(), 5).holds


def test_prop4_hypothesis_failures() -> None:
    report = verify_prop4_hypothesis(build_named("empty", 4), 2)
    assert report.rho_is_automorphism and report.b_regular
    assert not report.orbits_are_pairs and not report.holds
    assert not verify_prop4_hypothesis(build_named("cycle", 4), 2).holds
    with pytest.raises(ConstructionError):
        verify_prop4_hypothesis(build_named("cycle", 5), 2)


def test_prop4_graph_rejects_bad_orders() -> None:
    with pytest.raises(ConstructionError):
        prop4_graph(build_named("cycle", 6), cyclic_tournament(5))
    with pytest.raises(ConstructionError):
        prop4_graph(build_named("path", 6), cyclic_tournament(3))


def test_pair_blowup_and_involution() -> None:
    blown = pair_blowup(build_named("path", 2))
    assert blown.n == 4 and blown.edge_count == 4
    assert not blown.has_edge(0, 1)
    rho = pair_involution(3)
    assert rho.images == (1, 0, 3, 2, 5, 4)


def test_bipartite18_triples_and_phi() -> None:
    g, x = bipartite18()
    switched = apply_switching_set(g, x)
    assert is_switching_set(g, x)
    assert common_neighbor_triples(g, x, U_VERTICES) == PRE_SWITCH_TRIPLES
    assert common_neighbor_triples(switched, x, U_VERTICES) == POST_SWITCH_TRIPLES
    assert common_neighbor_triples(g, range(8, 12), U_VERTICES) == PRE_SWITCH_TRIPLES
    assert is_isomorphism(g, switched, bipartite18_phi())


def test_example27() -> None:
    g, x = example27()
    assert g.n == 27
    assert g.induced(range(EXAMPLE27_GADGET_OFFSET, 27)) == gadget9()
    assert is_isomorphism(g, apply_switching_set(g, x), example27_phi())


def test_four_cycles() -> None:
    assert grid_four_cycle(4, 3) == frozenset({0, 1, 3, 4})
    assert triangular_four_cycle(5) == frozenset({0, 2, 3, 5})
    with pytest.raises(ConstructionError):
        grid_four_cycle(1, 3)
    with pytest.raises(ConstructionError):
        triangular_four_cycle(3)


def test_degree_change_instance() -> None:
    g, x = degree_change_instance()
    assert sorted(g.degree(v) for v in x) == [1, 1, 2, 2]
    assert is_switching_set(g, x)


def test_transversals() -> None:
    assert len(all_transversals(4)) == 24
    assert frozenset({0, 5, 10, 15}) in all_transversals(4)


@pytest.mark.parametrize(
    "name",
    ["m5", "bipartite18", "gadget9", "example27", "degree-change", "grid:4,4", "triangular:5", "tournament:5"],
)
def test_named_fixtures(name: str) -> None:
    built = fixture(name)
    assert built.name == name
    if built.switching_set is not None:
        assert is_switching_set(built.graph, built.switching_set)


def test_fixture_errors() -> None:
    assert "grid:L,M" in FIXTURE_NAMES
    for bad in ("nope", "grid:4", "grid:a,b", "tournament:4", "tournament:1", "m5:3", "triangular:1"):
        with pytest.raises(ConstructionError):
            fixture(bad)
    assert fixture("grid:1,3").switching_set is None
