"""Explicit graphs: regular tournaments, the 4m-vertex switching family and the size-four examples."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
import logging
from typing import Iterable, Sequence

from gm_switching.errors import ConstructionError, GraphError
from gm_switching.graph import (
    Graph,
    Permutation,
    apply_permutation,
    build_grid,
    build_named,
    build_triangular,
    graph_from_edges,
    graph_from_matrix,
    triangular_label,
)
from gm_switching.isomorphism import automorphism_group
from gm_switching.switching import is_switching_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TournamentMatrix:
    """``T + T^T = J - I``."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != m:
                raise ConstructionError(f"tournament row {i} has length {len(row)}, expected {m}")
            if row[i] != 0:
                raise ConstructionError(f"tournament diagonal entry ({i}, {i}) is not zero")
            for j in range(m):
                if j != i and row[j] + self.entries[j][i] != 1:
                    raise ConstructionError(f"entries ({i}, {j}) and ({j}, {i}) do not form a tournament pair")

    @property
    def order(self) -> int:
        return len(self.entries)

    def is_regular(self) -> bool:
        return len({sum(row) for row in self.entries}) <= 1


def is_regular_tournament(entries: Sequence[Sequence[int]]) -> bool:
    try:
        tournament = TournamentMatrix(tuple(tuple(row) for row in entries))
    except ConstructionError:
        return False
    return tournament.is_regular()


def cyclic_tournament(m: int) -> TournamentMatrix:
    """Vertex ``i`` beats ``i+1, ..., i+(m-1)/2`` modulo ``m``."""
    if m < 1 or m % 2 == 0:
        raise ConstructionError(f"regular tournaments need an odd order, got {m}")
    half = (m - 1) // 2
    return TournamentMatrix(
        tuple(tuple(int(1 <= (j - i) % m <= half) for j in range(m)) for i in range(m))
    )


def pair_blowup(h: Graph) -> Graph:
    """``E (x) J_2``: vertex ``i`` becomes the non-adjacent pair ``2i, 2i+1``."""
    return graph_from_edges(
        2 * h.n,
        [(2 * i + a, 2 * j + b) for i, j in h.edges for a in range(2) for b in range(2)],
    )


def prop4_graph(b: Graph, tournament: TournamentMatrix) -> tuple[Graph, frozenset[int]]:
    """The graph ``[[B, N], [N^T, B]]`` with ``N = T (x) J_2 + I`` and the switching set ``X_1``."""
    m = tournament.order
    if m < 2:
        raise ConstructionError(f"the construction needs m > 1, got {m}")
    if b.n != 2 * m:
        raise ConstructionError(f"B has order {b.n}, expected {2 * m} for a tournament of order {m}")
    size = 2 * m
    edges = list(b.edges) + [(size + u, size + v) for u, v in b.edges]
    for u in range(size):
        for v in range(size):
            if u == v or tournament.entries[u // 2][v // 2]:
                edges.append((u, size + v))
    g = graph_from_edges(2 * size, edges)
    x1 = frozenset(range(size))
    if not is_switching_set(g, x1):
        raise ConstructionError("X_1 is not a switching set; B must be regular")
    return g, x1


def prop4_witness(m: int) -> Permutation:
    """``Q = [[O, I], [R, O]]`` as a vertex map, with ``R`` swapping each pair ``2i, 2i+1``."""
    size = 2 * m
    return Permutation(
        tuple(size + (v ^ 1) if v < size else v - size for v in range(2 * size))
    )


def pair_involution(m: int) -> Permutation:
    return Permutation(tuple(v ^ 1 for v in range(2 * m)))


@dataclass(frozen=True)
class Prop4Report:
    order_ok: bool
    rho_is_automorphism: bool
    rho_fixed_point_free_involution: bool
    orbits_are_pairs: bool
    b_regular: bool

    @property
    def holds(self) -> bool:
        return (
            self.order_ok
            and self.rho_is_automorphism
            and self.rho_fixed_point_free_involution
            and self.orbits_are_pairs
            and self.b_regular
        )


def verify_prop4_hypothesis(b: Graph, m: int) -> Prop4Report:
    if b.n != 2 * m:
        raise ConstructionError(f"B has order {b.n}, expected {2 * m}")
    rho = pair_involution(m)
    pairs = tuple((2 * i, 2 * i + 1) for i in range(m))
    return Prop4Report(
        order_ok=m > 1,
        rho_is_automorphism=apply_permutation(b, rho) == b,
        rho_fixed_point_free_involution=rho.compose(rho).is_identity() and all(rho(v) != v for v in range(b.n)),
        orbits_are_pairs=automorphism_group(b).orbit_partition == pairs,
        b_regular=b.is_regular(),
    )


_M5_BLOCKS = (
    "ZOZOJ",
    "OZJZO",
    "ZJOZO",
    "OZZOJ",
    "JOOJO",
)
_BLOCK_ENTRIES = {"Z": ((0, 1), (1, 0)), "O": ((0, 0), (0, 0)), "J": ((1, 1), (1, 1))}


def m5_h() -> Graph:
    """The 10-vertex 4-regular graph whose automorphism orbits are the pairs ``{2i, 2i+1}``."""
    rows = [
        [_BLOCK_ENTRIES[block][a][c] for block in pattern for c in range(2)]
        for pattern in _M5_BLOCKS
        for a in range(2)
    ]
    return graph_from_matrix(rows)


def m5() -> tuple[Graph, frozenset[int]]:
    return prop4_graph(m5_h(), cyclic_tournament(5))


U_OFFSET = 12
_U_NEIGHBORS = (
    (0, 1, 4, 6, 8, 11),
    (1, 2, 4, 5, 8, 10),
    (1, 3, 5, 6, 8, 9),
    (2, 3, 5, 7, 9, 10),
    (0, 3, 6, 7, 9, 11),
    (0, 2, 4, 7, 10, 11),
)


def bipartite18() -> tuple[Graph, frozenset[int]]:
    """Letters ``a..d = 0..3``, primed ``4..7``, double-primed ``8..11``, ``u_0..u_5 = 12..17``."""
    edges = [(U_OFFSET + i, letter) for i, letters in enumerate(_U_NEIGHBORS) for letter in letters]
    return graph_from_edges(18, edges), frozenset(range(4))


def _phi_images() -> list[int]:
    images = [(v + 4) % 12 for v in range(12)]
    images.extend(U_OFFSET + (i + 1) % 6 for i in range(6))
    return images


def bipartite18_phi() -> Permutation:
    """``x -> x' -> x'' -> x`` on letters and ``u_i -> u_{i+1}``."""
    return Permutation(tuple(_phi_images()))


def common_neighbor_triples(g: Graph, vertices: Iterable[int], u_vertices: Sequence[int]) -> frozenset[tuple[int, ...]]:
    """For each given vertex, the indices into ``u_vertices`` of its neighbors there."""
    return frozenset(
        tuple(index for index, u in enumerate(u_vertices) if g.has_edge(v, u)) for v in vertices
    )


GADGET_SIZE = 9


def _gadget_edges(offset: int) -> list[tuple[int, int]]:
    def a(i: int) -> int:
        return offset + i % 3

    def b(i: int) -> int:
        return offset + 3 + i % 3

    def c(i: int) -> int:
        return offset + 6 + i % 3

    edges: list[tuple[int, int]] = []
    for i in range(3):
        edges += [(a(i), b(i)), (a(i), c(i - 1)), (b(i), c(i)), (b(i), b(i + 1)), (b(i), c(i - 1))]
    return edges


def gadget9() -> Graph:
    """15 edges on ``a_0..a_2, b_0..b_2, c_0..c_2 = 0..8`` with automorphism group C_3."""
    return graph_from_edges(GADGET_SIZE, _gadget_edges(0))


EXAMPLE27_GADGET_OFFSET = 18


def example27() -> tuple[Graph, frozenset[int]]:
    """bipartite18 with gadget9 at ``18..26``; ``a_0, a_1, a_2`` are joined to X, X', X''."""
    base, x = bipartite18()
    edges = list(base.edges) + _gadget_edges(EXAMPLE27_GADGET_OFFSET)
    for copy in range(3):
        edges += [(EXAMPLE27_GADGET_OFFSET + copy, 4 * copy + letter) for letter in range(4)]
    return graph_from_edges(27, edges), x


def example27_phi() -> Permutation:
    images = _phi_images()
    for letter in range(3):
        start = EXAMPLE27_GADGET_OFFSET + 3 * letter
        images.extend(start + (i + 1) % 3 for i in range(3))
    return Permutation(tuple(images))


def grid_four_cycle(l: int, m: int) -> frozenset[int]:
    """Cells ``(0,0), (0,1), (1,1), (1,0)`` of L(l, m)."""
    if l < 2 or m < 2:
        raise ConstructionError(f"a 4-cycle needs a grid of at least 2x2, got {l}x{m}")
    return frozenset((0, 1, m, m + 1))


def triangular_four_cycle(m: int) -> frozenset[int]:
    """Pairs ``01, 12, 23, 03`` of T(m)."""
    if m < 4:
        raise ConstructionError(f"a 4-cycle in T(m) needs m >= 4, got {m}")
    return frozenset(triangular_label(i, j) for i, j in ((0, 1), (1, 2), (2, 3), (0, 3)))


def degree_change_instance() -> tuple[Graph, frozenset[int]]:
    """Coclique ``{0,1,2,3}`` with unequal degrees whose degree multiset survives switching."""
    edges = [(4, 0), (4, 1)] + [(5, x) for x in range(4)]
    return graph_from_edges(6, edges), frozenset(range(4))


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    switching_set: frozenset[int] | None


FIXTURE_NAMES = (
    "m5",
    "bipartite18",
    "gadget9",
    "example27",
    "degree-change",
    "grid:L,M",
    "triangular:M",
    "tournament:M",
)


def _parse_params(name: str, text: str, count: int) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise ConstructionError(f"fixture {name!r} takes {count} parameter(s)")
    try:
        return [int(part) for part in parts]
    except ValueError as exc:
        raise ConstructionError(f"fixture {name!r} has a non-integer parameter") from exc


def fixture(name: str) -> Fixture:
    kind, _, params = name.partition(":")
    try:
        if kind == "m5" and not params:
            g, x = m5()
        elif kind == "bipartite18" and not params:
            g, x = bipartite18()
        elif kind == "example27" and not params:
            g, x = example27()
        elif kind == "degree-change" and not params:
            g, x = degree_change_instance()
        elif kind == "gadget9" and not params:
            return Fixture(name, gadget9(), None)
        elif kind == "grid":
            l, m = _parse_params(name, params, 2)
            grid_set = grid_four_cycle(l, m) if l >= 2 and m >= 2 else None
            return Fixture(name, build_grid(l, m), grid_set)
        elif kind == "triangular":
            (m,) = _parse_params(name, params, 1)
            return Fixture(name, build_triangular(m), triangular_four_cycle(m) if m >= 4 else None)
        elif kind == "tournament":
            (m,) = _parse_params(name, params, 1)
            if m < 3:
                raise ConstructionError(f"tournament fixture needs an odd order >= 3, got {m}")
            g, x = prop4_graph(pair_blowup(build_named("cycle", m)), cyclic_tournament(m))
        else:
            raise ConstructionError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURE_NAMES)}")
    except GraphError as exc:
        raise ConstructionError(f"fixture {name!r}: {exc.message}") from exc
    logger.debug("fixture %s: n=%d edges=%d", name, g.n, g.edge_count)
    return Fixture(name, g, x)


def all_transversals(n: int) -> list[frozenset[int]]:
    """The ``n!`` permutation patterns of L(n, n), as vertex sets."""
    return [frozenset(r * n + c for r, c in enumerate(columns)) for columns in permutations(range(n))]

