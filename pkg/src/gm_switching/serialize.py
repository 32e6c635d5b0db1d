"""JSON shapes for graphs, witnesses and reports."""

from __future__ import annotations

from typing import Iterable

from gm_switching.graph import Graph, Permutation
from gm_switching.graph6 import to_graph6
from gm_switching.invariants import Lemma3Report, Multiset, Theorem4Report
from gm_switching.isomorphism import AutomorphismGroup
from gm_switching.spectrum import IntPolynomial
from gm_switching.switching import BlockDecomposition, SwitchingPartition, ValidationReport

JsonDict = dict[str, object]


def graph6_text(g: Graph) -> str:
    return to_graph6(g).decode("ascii")


def graph_to_json(g: Graph) -> JsonDict:
    return {"n": g.n, "edges": g.edge_count, "graph6": graph6_text(g)}


def vertex_set_to_json(vertices: Iterable[int]) -> list[int]:
    return sorted(vertices)


def partition_to_json(p: SwitchingPartition) -> list[list[int]]:
    return p.sorted_cells()


def permutation_to_json(p: Permutation | None) -> list[int] | None:
    return None if p is None else list(p.images)


def polynomial_to_json(p: IntPolynomial) -> list[str]:
    return p.to_strings()


def multiset_to_json(m: Multiset) -> list[int]:
    return list(m.values)


def validation_to_json(report: ValidationReport) -> JsonDict:
    return {
        "valid": report.valid,
        "cell_degrees": [list(row) for row in report.cell_degrees],
        "y_classes": {str(y): list(classes) for y, classes in zip(report.y_vertices, report.y_classes)},
    }


def blocks_to_json(blocks: BlockDecomposition) -> JsonDict:
    return {
        "x": list(blocks.x_vertices),
        "b": [list(row) for row in blocks.b],
        "n_vertices": list(blocks.n_vertices),
        "j_vertices": list(blocks.j_vertices),
        "o_vertices": list(blocks.o_vertices),
        "n": [list(row) for row in blocks.n_block],
    }


def group_to_json(group: AutomorphismGroup) -> JsonDict:
    return {
        "order": str(group.order),
        "generators": [list(p.images) for p in group.generators],
        "orbits": [list(orbit) for orbit in group.orbit_partition],
        "base": list(group.base),
    }


def lemma3_to_json(report: Lemma3Report) -> JsonDict:
    return {
        "cond_i": report.cond_i,
        "cond_ii": report.cond_ii,
        "cond_iii": report.cond_iii,
        "same_degree_on_x": report.same_degree_on_x,
        "profile_changed": report.profile_changed,
        "certifies_noniso": report.certifies_noniso,
        "degrees": {"before": multiset_to_json(report.degrees_before), "after": multiset_to_json(report.degrees_after)},
        "lambda": {"before": multiset_to_json(report.lambda_before), "after": multiset_to_json(report.lambda_after)},
        "lambda_bar": {
            "before": multiset_to_json(report.lambda_bar_before),
            "after": multiset_to_json(report.lambda_bar_after),
        },
    }


def theorem4_to_json(report: Theorem4Report) -> JsonDict:
    return {
        "kind": report.kind,
        "satisfied": report.satisfied,
        "same_degree_on_x": report.same_degree_on_x,
        "lambda_bar_invariant": report.lambda_bar_invariant,
        "case_coclique": report.case_coclique,
        "case_halfregular": report.case_halfregular,
        "vertex_condition_tensor": report.vertex_condition_tensor,
        "vertex_condition_strengthened": report.vertex_condition_strengthened,
    }
