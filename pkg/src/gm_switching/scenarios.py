"""End-to-end scenario runners behind ``gm verify`` and the ``gm census`` classifier."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, permutations
import logging
import random
import time
from typing import Callable, Iterable, Iterator, Literal

from sympy import Poly, eye, symbols
from sympy import Matrix as SymMatrix

from gm_switching.config import Config
from gm_switching.constructions import (
    all_transversals,
    bipartite18,
    bipartite18_phi,
    common_neighbor_triples,
    degree_change_instance,
    example27,
    example27_phi,
    gadget9,
    grid_four_cycle,
    m5,
    m5_h,
    prop4_witness,
    triangular_four_cycle,
    verify_prop4_hypothesis,
)
from gm_switching.graph import (
    Graph,
    Permutation,
    build_grid,
    build_named,
    build_triangular,
    graph_from_edges,
    vertex_mask,
)
from gm_switching.graph6 import parse_graph6
from gm_switching.invariants import ProductKind, common_neighbors, lemma3_check, theorem4_hypothesis
from gm_switching.isomorphism import (
    are_isomorphic,
    automorphism_group,
    is_isomorphism,
    isomorphism_fixing_set,
    iter_isomorphisms_fixing_set,
)
from gm_switching.products import (
    PRODUCTS,
    closed_common_neighbors,
    lift_switching_set,
    product,
    product_switching_partition,
    tensor,
)
from gm_switching.spectrum import IntPolynomial, char_poly, cospectral
from gm_switching.switching import (
    SwitchingPartition,
    apply_switching,
    apply_switching_set,
    enumerate_switching_sets,
    is_switching_set,
    validate_partition,
)

logger = logging.getLogger(__name__)

CensusClass = Literal["noniso-certified", "noniso", "iso-fixing", "iso-nonfixing"]

PRE_SWITCH_TRIPLES = frozenset({(0, 4, 5), (0, 1, 2), (1, 3, 5), (2, 3, 4)})
POST_SWITCH_TRIPLES = frozenset({(1, 2, 3), (3, 4, 5), (0, 2, 4), (0, 1, 5)})
SET_FIXING_WITNESS_LIMIT = 2000


@dataclass
class ScenarioResult:
    name: str
    checks: list[tuple[str, bool]] = field(default_factory=list)
    details: dict[str, object] = field(default_factory=dict)
    seconds: float = 0.0

    def check(self, label: str, condition: bool) -> bool:
        self.checks.append((label, condition))
        if not condition:
            logger.debug("scenario %s: check failed: %s", self.name, label)
        return condition

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


# oracles


def brute_force_isomorphism(g: Graph, h: Graph) -> Permutation | None:
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    for images in permutations(range(g.n)):
        candidate = Permutation(images)
        if is_isomorphism(g, h, candidate):
            return candidate
    return None


def brute_force_automorphism_count(g: Graph) -> int:
    return sum(1 for images in permutations(range(g.n)) if is_isomorphism(g, g, Permutation(images)))


def cofactor_char_poly(g: Graph) -> IntPolynomial:
    """det(xI - A) by symbolic Laplace expansion."""
    if g.n == 0:
        return IntPolynomial((1,))
    x = symbols("x")
    determinant = (x * eye(g.n) - SymMatrix(g.matrix())).det(method="laplace")
    return IntPolynomial(tuple(int(c) for c in reversed(Poly(determinant, x).all_coeffs())))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return graph_from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


# scenarios


def scenario_grid(config: Config) -> ScenarioResult:
    result = ScenarioResult("grid")
    g = build_grid(4, 4)
    sets = enumerate_switching_sets(g, 4, cocliques_only=True)
    result.check("24 coclique switching sets", len(sets) == 24)
    result.check("exactly the transversals", {frozenset(s) for s in sets} == set(all_transversals(4)))
    cospectral_count = 0
    noniso_count = 0
    for x in sets:
        switched = apply_switching_set(g, x)
        cospectral_count += cospectral(g, switched)
        noniso_count += are_isomorphic(g, switched) is None
    result.check("every switch cospectral", cospectral_count == len(sets))
    result.check("every switch non-isomorphic", noniso_count == len(sets))
    result.details.update(sets=len(sets), cospectral=cospectral_count, non_isomorphic=noniso_count)
    return result


def scenario_m5(config: Config) -> ScenarioResult:
    result = ScenarioResult("m5")
    g, x1 = m5()
    switched = apply_switching_set(g, x1)
    result.check("20 vertices, 9-regular", g.n == 20 and set(g.degrees) == {9})
    result.check("H satisfies the orbit hypothesis", verify_prop4_hypothesis(m5_h(), 5).holds)
    result.check("block witness Q verifies", is_isomorphism(g, switched, prop4_witness(5)))
    result.check("search finds an isomorphism", are_isomorphic(g, switched) is not None)
    result.check("no isomorphism fixes X1", isomorphism_fixing_set(g, switched, x1) is None)
    result.check("cospectral", cospectral(g, switched))
    return result


def scenario_bipartite18(config: Config) -> ScenarioResult:
    result = ScenarioResult("bipartite18")
    g, x = bipartite18()
    switched = apply_switching_set(g, x)
    u_vertices = list(range(12, 18))
    x_prime, x_double = range(4, 8), range(8, 12)
    result.check("phi is an isomorphism", is_isomorphism(g, switched, bipartite18_phi()))
    result.check("triples on X before switching", common_neighbor_triples(g, x, u_vertices) == PRE_SWITCH_TRIPLES)
    result.check("triples on X after switching", common_neighbor_triples(switched, x, u_vertices) == POST_SWITCH_TRIPLES)
    result.check("X'' carries the former triples", common_neighbor_triples(g, x_double, u_vertices) == PRE_SWITCH_TRIPLES)
    result.check("X' carries the latter triples", common_neighbor_triples(g, x_prime, u_vertices) == POST_SWITCH_TRIPLES)
    witnesses = 0
    interchanging = 0
    for p in iter_isomorphisms_fixing_set(g, switched, x):
        witnesses += 1
        interchanging += p.image_of(x_prime) == frozenset(x_double) and p.image_of(x_double) == frozenset(x_prime)
        if witnesses >= SET_FIXING_WITNESS_LIMIT:
            break
    result.check("an isomorphism fixes X", witnesses > 0)
    result.check("every X-fixing isomorphism swaps X' and X''", interchanging == witnesses)
    result.details.update(set_fixing_witnesses=witnesses)
    return result


def scenario_example27(config: Config) -> ScenarioResult:
    result = ScenarioResult("example27")
    g, x = example27()
    report = validate_partition(g, SwitchingPartition.single(x))
    result.check("X is a switching set", report.valid)
    expected = {y: ("half",) if 12 <= y < 18 else ("full",) if y == 18 else ("zero",) for y in report.y_vertices}
    result.check("outside classes", all(report.classes_of(y) == cls for y, cls in expected.items()))
    switched = apply_switching_set(g, x)
    result.check("extended phi is an isomorphism", is_isomorphism(g, switched, example27_phi()))
    result.check("search finds an isomorphism", are_isomorphic(g, switched) is not None)
    result.check("no isomorphism fixes X", isomorphism_fixing_set(g, switched, x) is None)
    return result


def scenario_gadget(config: Config) -> ScenarioResult:
    result = ScenarioResult("gadget")
    g = gadget9()
    group = automorphism_group(g)
    result.check("15 edges", g.edge_count == 15)
    result.check("group order 3", group.order == 3)
    result.check("orbits are the letter classes", group.orbit_partition == ((0, 1, 2), (3, 4, 5), (6, 7, 8)))
    result.details.update(order=str(group.order))
    return result


def _product_switch_checks(
    result: ScenarioResult, h: Graph, g: Graph, x: frozenset[int], kind: ProductKind, expect: bool
) -> None:
    report = theorem4_hypothesis(g, x, h, 0, kind)
    prod = product(kind, h, g)
    lifted = lift_switching_set(h, 0, x, g)
    switched = apply_switching_set(prod, lifted)
    isomorphic = are_isomorphic(prod, switched) is not None
    label = f"{kind} product on {prod.n} vertices"
    result.check(f"{label}: hypothesis {'holds' if expect else 'fails'}", report.satisfied == expect)
    result.check(f"{label}: cospectral after switching", cospectral(prod, switched))
    result.check(f"{label}: {'non-isomorphic' if expect else 'isomorphic'} after switching", isomorphic != expect)


def scenario_thm4_tensor(config: Config) -> ScenarioResult:
    result = ScenarioResult("thm4-tensor")
    path = build_named("path", 3)
    _product_switch_checks(result, path, build_grid(4, 3), grid_four_cycle(4, 3), "tensor", True)
    _product_switch_checks(result, path, build_grid(3, 2), grid_four_cycle(3, 2), "tensor", False)
    k2_report = theorem4_hypothesis(build_grid(4, 3), grid_four_cycle(4, 3), build_named("complete", 2), 0, "tensor")
    result.check("K2 fails the tensor vertex condition", not k2_report.vertex_condition_tensor)
    return result


def scenario_thm4_strengthened(config: Config) -> ScenarioResult:
    result = ScenarioResult("thm4-strengthened")
    k2 = build_named("complete", 2)
    _product_switch_checks(result, k2, build_triangular(5), triangular_four_cycle(5), "strengthened", True)
    t4 = build_triangular(4)
    x4 = triangular_four_cycle(4)
    result.check("T(4) 4-cycle fails the hypothesis", not theorem4_hypothesis(t4, x4, k2, 0, "strengthened").satisfied)
    result.check("T(4) 4-cycle switch is the identity", apply_switching_set(t4, x4) == t4)
    return result


def scenario_sweep(config: Config) -> ScenarioResult:
    result = ScenarioResult("sweep")
    rng = random.Random(config.seed)
    switches = cospectral_count = involutive = violations = certified = 0
    poly_checked = poly_mismatch = iso_checked = iso_mismatch = aut_checked = aut_mismatch = 0
    for index in range(config.sweep_graphs):
        g = random_graph(rng, rng.randint(4, 9))
        largest: tuple[int, ...] | None = None
        poly = char_poly(g)
        for size in range(2, min(6, g.n) + 1):
            for x in enumerate_switching_sets(g, size):
                switched = apply_switching_set(g, x)
                switches += 1
                cospectral_count += poly == char_poly(switched)
                involutive += apply_switching_set(switched, x) == g
                if lemma3_check(g, x).certifies_noniso:
                    certified += 1
                    violations += are_isomorphic(g, switched) is not None
                largest = x
        if g.n <= 6:
            poly_checked += 1
            poly_mismatch += poly != cofactor_char_poly(g)
        if g.n <= 7:
            aut_checked += 1
            aut_mismatch += automorphism_group(g).order != brute_force_automorphism_count(g)
            if largest is not None:
                switched = apply_switching_set(g, largest)
                iso_checked += 1
                iso_mismatch += (are_isomorphic(g, switched) is None) != (brute_force_isomorphism(g, switched) is None)
        logger.debug("sweep graph %d: n=%d switches so far %d", index, g.n, switches)
    result.check("every switch cospectral", cospectral_count == switches)
    result.check("every switch involutive", involutive == switches)
    result.check("no unsound non-isomorphism certificate", violations == 0)
    result.check("char_poly matches cofactor expansion", poly_mismatch == 0)
    result.check("isomorphism matches brute force", iso_mismatch == 0)
    result.check("automorphism order matches brute force", aut_mismatch == 0)
    result.details.update(
        graphs=config.sweep_graphs,
        switches=switches,
        certified=certified,
        polynomial_oracle_checks=poly_checked,
        isomorphism_oracle_checks=iso_checked,
        automorphism_oracle_checks=aut_checked,
    )
    return result


def _lambda_identities_hold(h: Graph, g: Graph) -> bool:
    plain = tensor(h, g)
    strong = product("strengthened", h, g)
    for i in range(h.n):
        for j in range(h.n):
            for x in range(g.n):
                for y in range(g.n):
                    a, b = i * g.n + x, j * g.n + y
                    lam = common_neighbors(g, x, y)
                    if common_neighbors(plain, a, b) != common_neighbors(h, i, j) * lam:
                        return False
                    if common_neighbors(strong, a, b) != closed_common_neighbors(h, i, j) * lam:
                        return False
    return True


def scenario_products(config: Config, pairs: int = 50) -> ScenarioResult:
    result = ScenarioResult("products")
    rng = random.Random(config.seed + 1)
    lambda_ok = commute_ok = reflection_ok = 0
    k2 = build_named("complete", 2)
    for _ in range(pairs):
        h = random_graph(rng, rng.randint(1, 4))
        g = random_graph(rng, rng.randint(2, 7))
        lambda_ok += _lambda_identities_hold(h, g)
        x = _largest_switching_set(g)
        switched_g = apply_switching_set(g, x)
        commute_ok += all(
            apply_switching(product(kind, h, g), product_switching_partition(h, x, g, kind))
            == product(kind, h, switched_g)
            for kind in PRODUCTS
        )
        sign = -1 if g.n % 2 else 1
        reflection_ok += char_poly(tensor(k2, g)) == (char_poly(g) * char_poly(g).reflected()).scaled(sign)
    result.check("lambda product identities", lambda_ok == pairs)
    result.check("partition lift commutes with switching", commute_ok == pairs)
    result.check("K2 x G polynomial is p(x) p(-x) up to sign", reflection_ok == pairs)
    result.details.update(pairs=pairs)
    return result


def scenario_degree_question(config: Config) -> ScenarioResult:
    result = ScenarioResult("degree-question")
    g, x = degree_change_instance()
    report = lemma3_check(g, x)
    switched = apply_switching_set(g, x)
    result.check(
        "X is a coclique switching set",
        is_switching_set(g, x) and not any(g.adj[v] & vertex_mask(x) for v in x),
    )
    result.check("X degrees are not all equal", not report.same_degree_on_x)
    result.check("degree multiset on X unchanged", report.degrees_before == report.degrees_after)
    result.check("switched graph is isomorphic", are_isomorphic(g, switched) is not None)
    result.details.update(degrees=list(report.degrees_before.values))
    return result


def _largest_switching_set(g: Graph) -> tuple[int, ...]:
    for size in range(min(4, g.n), 1, -1):
        found = enumerate_switching_sets(g, size)
        if found:
            return found[0]
    return (0, 1)


SCENARIOS: dict[str, Callable[[Config], ScenarioResult]] = {
    "grid": scenario_grid,
    "m5": scenario_m5,
    "bipartite18": scenario_bipartite18,
    "example27": scenario_example27,
    "gadget": scenario_gadget,
    "thm4-tensor": scenario_thm4_tensor,
    "thm4-strengthened": scenario_thm4_strengthened,
    "sweep": scenario_sweep,
    "products": scenario_products,
    "degree-question": scenario_degree_question,
}


def run_scenario(name: str, config: Config) -> ScenarioResult:
    started = time.perf_counter()
    result = SCENARIOS[name](config)
    result.seconds = time.perf_counter() - started
    return result


# census


def classify_switch(g: Graph, x: Iterable[int]) -> CensusClass:
    members = sorted(x)
    switched = apply_switching_set(g, members)
    if lemma3_check(g, members).certifies_noniso:
        return "noniso-certified"
    if are_isomorphic(g, switched) is None:
        return "noniso"
    if isomorphism_fixing_set(g, switched, members) is not None:
        return "iso-fixing"
    return "iso-nonfixing"


@dataclass(frozen=True)
class CensusJob:
    index: int
    line: str
    min_size: int
    max_size: int
    cocliques_only: bool


def census_line(job: CensusJob) -> dict[str, object]:
    g = parse_graph6(job.line)
    sets: list[dict[str, object]] = []
    for size in range(job.min_size, min(job.max_size, g.n) + 1):
        for x in enumerate_switching_sets(g, size, job.cocliques_only):
            sets.append({"set": list(x), "class": classify_switch(g, x)})
    return {"line": job.index, "graph6": job.line, "n": g.n, "sets": sets}


def run_census(
    jobs: Iterable[CensusJob], threads: int, chunk_size: int | None = None
) -> Iterator[dict[str, object]]:
    """Results in input order; lines are farmed out to worker processes when ``threads > 1``.

    ``jobs`` is consumed lazily, at most ``chunk_size`` (default ``4 * threads``) at a time, so a catalog never has to
    fit in memory.
    """
    if threads <= 1:
        yield from map(census_line, jobs)
        return
    chunk_size = chunk_size or 4 * threads
    pending = iter(jobs)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        while chunk := list(islice(pending, chunk_size)):
            yield from pool.map(census_line, chunk)
