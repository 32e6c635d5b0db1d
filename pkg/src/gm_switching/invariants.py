"""Common-neighbor statistics and the non-isomorphism / product-hypothesis checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Sequence

from gm_switching.errors import GraphError, SwitchingError
from gm_switching.graph import Graph
from gm_switching.switching import apply_switching_set, block_decomposition, is_switching_set

Scope = Literal["all", "complement"]
ProductKind = Literal["tensor", "strengthened"]


@dataclass(frozen=True)
class Multiset:
    values: tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable[int]) -> Multiset:
        return cls(tuple(sorted(values)))

    def __len__(self) -> int:
        return len(self.values)

    def __add__(self, other: Multiset) -> Multiset:
        return Multiset.of(self.values + other.values)


@dataclass(frozen=True)
class Lemma3Report:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    same_degree_on_x: bool
    degrees_before: Multiset
    degrees_after: Multiset
    lambda_before: Multiset
    lambda_after: Multiset
    lambda_bar_before: Multiset
    lambda_bar_after: Multiset
    profile_changed: bool

    @property
    def certifies_noniso(self) -> bool:
        return self.cond_i or self.cond_ii or self.cond_iii or self.profile_changed


@dataclass(frozen=True)
class Theorem4Report:
    kind: ProductKind
    same_degree_on_x: bool
    lambda_bar_invariant: bool
    case_coclique: bool
    case_halfregular: bool
    vertex_condition_tensor: bool
    vertex_condition_strengthened: bool

    def hypothesis_satisfied(self, kind: ProductKind) -> bool:
        vertex_condition = (
            self.vertex_condition_tensor if kind == "tensor" else self.vertex_condition_strengthened
        )
        return (
            self.same_degree_on_x
            and self.lambda_bar_invariant
            and (self.case_coclique or self.case_halfregular)
            and vertex_condition
        )

    @property
    def satisfied(self) -> bool:
        return self.hypothesis_satisfied(self.kind)


def common_neighbors(g: Graph, x: int, y: int) -> int:
    """``|N(x) & N(y)|``; the degree of ``x`` when ``x == y``."""
    g.check_vertices((x, y))
    return (g.adj[x] & g.adj[y]).bit_count()


def lambda_within(g: Graph, vertices: Iterable[int]) -> Multiset:
    """λ over unordered pairs of distinct vertices of the given set."""
    members = sorted(set(vertices))
    g.check_vertices(members)
    return Multiset.of(common_neighbors(g, x, y) for x, y in combinations(members, 2))


def lambda_multiset(g: Graph, vertices: Iterable[int], scope: Scope = "all") -> Multiset:
    members = sorted(set(vertices))
    if not members:
        raise GraphError("lambda multiset needs a non-empty vertex set")
    g.check_vertices(members)
    inside = frozenset(members)
    outside = [y for y in range(g.n) if y not in inside]
    mixed = Multiset.of(common_neighbors(g, x, y) for x in members for y in outside)
    if scope == "complement":
        return mixed
    return mixed + lambda_within(g, members) + Multiset.of(g.degree(x) for x in members)


def lambda_profile(g: Graph) -> Multiset:
    return lambda_within(g, range(g.n)) + Multiset.of(g.degrees)


def _require_switching_set(g: Graph, vertices: Iterable[int]) -> list[int]:
    members = sorted(set(vertices))
    if not members or not is_switching_set(g, members):
        raise SwitchingError(f"{members} is not a switching set")
    return members


def lemma3_check(g: Graph, vertices: Iterable[int]) -> Lemma3Report:
    members = _require_switching_set(g, vertices)
    switched = apply_switching_set(g, members)
    degrees_before = Multiset.of(g.degree(x) for x in members)
    degrees_after = Multiset.of(switched.degree(x) for x in members)
    lambda_before = lambda_multiset(g, members)
    lambda_after = lambda_multiset(switched, members)
    bar_before = lambda_multiset(g, members, "complement")
    bar_after = lambda_multiset(switched, members, "complement")
    same_degree = len(set(degrees_before.values)) == 1
    return Lemma3Report(
        cond_i=degrees_before != degrees_after,
        cond_ii=lambda_before != lambda_after,
        cond_iii=same_degree and bar_before != bar_after,
        same_degree_on_x=same_degree,
        degrees_before=degrees_before,
        degrees_after=degrees_after,
        lambda_before=lambda_before,
        lambda_after=lambda_after,
        lambda_bar_before=bar_before,
        lambda_bar_after=bar_after,
        profile_changed=lambda_profile(g) != lambda_profile(switched),
    )


def retained_neighbor_count(g: Graph, vertices: Iterable[int], x: int) -> int:
    """Neighbors of ``x`` that are still neighbors after switching."""
    members = _require_switching_set(g, vertices)
    if x not in members:
        raise SwitchingError(f"vertex {x} is not in the switching set {members}")
    switched = apply_switching_set(g, members)
    return (g.adj[x] & switched.adj[x]).bit_count()


def has_complementary_rows(matrix: Sequence[Sequence[int]]) -> bool:
    """True iff two distinct rows sum to the all-one row."""
    seen: set[tuple[int, ...]] = set()
    for row in matrix:
        if tuple(1 - entry for entry in row) in seen:
            return True
        seen.add(tuple(row))
    return False


def theorem4_hypothesis(
    g: Graph, vertices: Iterable[int], h: Graph, i: int, kind: ProductKind
) -> Theorem4Report:
    """Check whether ``{i} x X`` switches the product of ``h`` and ``g`` into a non-isomorphic mate."""
    members = _require_switching_set(g, vertices)
    h.check_vertices((i,))
    blocks = block_decomposition(g, members)
    switched = apply_switching_set(g, members)
    b_is_zero = not any(any(row) for row in blocks.b)
    return Theorem4Report(
        kind=kind,
        same_degree_on_x=len({g.degree(x) for x in members}) == 1,
        lambda_bar_invariant=lambda_multiset(g, members, "complement")
        == lambda_multiset(switched, members, "complement"),
        case_coclique=b_is_zero
        and len(blocks.n_vertices) >= 2
        and not has_complementary_rows(blocks.n_block),
        case_halfregular=all(2 * sum(row) == len(members) for row in blocks.b)
        and not has_complementary_rows(blocks.bn_rows()),
        vertex_condition_tensor=any(h.degree(j) >= 2 for j in h.neighbors(i)),
        vertex_condition_strengthened=h.degree(i) >= 1,
    )
