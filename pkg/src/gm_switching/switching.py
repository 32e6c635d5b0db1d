"""Godsil-McKay switching sets and partitions: validation, application, enumeration."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Iterable, Literal

from sympy import Matrix, Rational, eye

from gm_switching.errors import SwitchingError
from gm_switching.graph import Graph, Permutation, graph_from_edges, iter_bits, vertex_mask

logger = logging.getLogger(__name__)

YClass = Literal["zero", "half", "full", "invalid"]


@dataclass(frozen=True)
class SwitchingPartition:
    """Cells ``X_1..X_l``; every vertex outside the cells belongs to ``Y``."""

    cells: tuple[frozenset[int], ...]

    @classmethod
    def single(cls, vertices: Iterable[int]) -> SwitchingPartition:
        return cls((frozenset(vertices),))

    @classmethod
    def of(cls, cells: Iterable[Iterable[int]]) -> SwitchingPartition:
        return cls(tuple(frozenset(cell) for cell in cells))

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for cell in self.cells for v in cell)

    def outside(self, n: int) -> tuple[int, ...]:
        covered = self.covered
        return tuple(v for v in range(n) if v not in covered)

    def sorted_cells(self) -> list[list[int]]:
        return [sorted(cell) for cell in self.cells]


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    cell_degrees: tuple[tuple[int | None, ...], ...]
    y_vertices: tuple[int, ...]
    y_classes: tuple[tuple[YClass, ...], ...]

    def classes_of(self, y: int) -> tuple[YClass, ...]:
        return self.y_classes[self.y_vertices.index(y)]


@dataclass(frozen=True)
class BlockDecomposition:
    """``A = [[B, M], [M^T, C]]`` with ``M = [N J O]``; ``C`` is indexed by ``y_order``."""

    x_vertices: tuple[int, ...]
    b: tuple[tuple[int, ...], ...]
    n_vertices: tuple[int, ...]
    j_vertices: tuple[int, ...]
    o_vertices: tuple[int, ...]
    n_block: tuple[tuple[int, ...], ...]
    c: tuple[tuple[int, ...], ...]

    @property
    def y_order(self) -> tuple[int, ...]:
        return self.n_vertices + self.j_vertices + self.o_vertices

    @property
    def b_row_sum(self) -> int:
        return sum(self.b[0]) if self.b else 0

    def bn_rows(self) -> list[tuple[int, ...]]:
        """Rows of ``[B N]``, one per vertex of X."""
        return [b_row + n_row for b_row, n_row in zip(self.b, self.n_block)]

    def to_graph(self) -> Graph:
        labels = self.x_vertices + self.y_order
        edges: list[tuple[int, int]] = []
        for a, x in enumerate(self.x_vertices):
            edges.extend((x, self.x_vertices[b]) for b in range(a + 1, len(self.x_vertices)) if self.b[a][b])
            edges.extend((x, y) for col, y in enumerate(self.n_vertices) if self.n_block[a][col])
            edges.extend((x, y) for y in self.j_vertices)
        y_order = self.y_order
        for a, y in enumerate(y_order):
            edges.extend((y, y_order[b]) for b in range(a + 1, len(y_order)) if self.c[a][b])
        return graph_from_edges(len(labels), edges)


@dataclass(frozen=True)
class BlockPermutations:
    """Restrictions of a set-fixing isomorphism to X and to Y, in local indices."""

    x_order: tuple[int, ...]
    y_order: tuple[int, ...]
    p: Permutation
    q: Permutation
    b_preserved: bool
    m_mapped: bool
    c_preserved: bool

    @property
    def holds(self) -> bool:
        return self.b_preserved and self.m_mapped and self.c_preserved


def _check_partition(g: Graph, p: SwitchingPartition) -> None:
    seen = 0
    for index, cell in enumerate(p.cells):
        if not cell:
            raise SwitchingError(f"cell {index} is empty")
        g.check_vertices(cell)
        mask = vertex_mask(cell)
        if seen & mask:
            raise SwitchingError(f"cell {index} overlaps an earlier cell at {sorted(iter_bits(seen & mask))}")
        seen |= mask


def _classify(count: int, size: int) -> YClass:
    if count == 0:
        return "zero"
    if count == size:
        return "full"
    if 2 * count == size:
        return "half"
    return "invalid"


def validate_partition(g: Graph, p: SwitchingPartition) -> ValidationReport:
    _check_partition(g, p)
    masks = [vertex_mask(cell) for cell in p.cells]
    cell_degrees = tuple(tuple(_common_count(g, cell, mask) for mask in masks) for cell in p.cells)
    y_vertices = p.outside(g.n)
    y_classes = tuple(
        tuple(_classify((g.adj[y] & mask).bit_count(), len(cell)) for cell, mask in zip(p.cells, masks))
        for y in y_vertices
    )
    valid = all(k is not None for row in cell_degrees for k in row) and all(
        cls != "invalid" for classes in y_classes for cls in classes
    )
    return ValidationReport(valid, cell_degrees, y_vertices, y_classes)


def _common_count(g: Graph, cell: frozenset[int], mask: int) -> int | None:
    counts = {(g.adj[x] & mask).bit_count() for x in cell}
    return counts.pop() if len(counts) == 1 else None


def is_switching_set(g: Graph, vertices: Iterable[int]) -> bool:
    return validate_partition(g, SwitchingPartition.single(vertices)).valid


def apply_switching(g: Graph, p: SwitchingPartition) -> Graph:
    """Complement, for every half-class Y vertex, its neighborhood inside that cell."""
    report = validate_partition(g, p)
    if not report.valid:
        raise SwitchingError(f"not a switching partition: {p.sorted_cells()}")
    rows = list(g.adj)
    for y, classes in zip(report.y_vertices, report.y_classes):
        for cell, cls in zip(p.cells, classes):
            if cls != "half":
                continue
            rows[y] ^= vertex_mask(cell)
            for x in cell:
                rows[x] ^= 1 << y
    return Graph(g.n, tuple(rows))


def apply_switching_set(g: Graph, vertices: Iterable[int]) -> Graph:
    return apply_switching(g, SwitchingPartition.single(vertices))


def block_decomposition(g: Graph, vertices: Iterable[int]) -> BlockDecomposition:
    partition = SwitchingPartition.single(vertices)
    report = validate_partition(g, partition)
    if not report.valid:
        raise SwitchingError(f"{sorted(partition.cells[0])} is not a switching set")
    x_vertices = tuple(sorted(partition.cells[0]))
    by_class: dict[YClass, list[int]] = {"half": [], "full": [], "zero": []}
    for y, (cls,) in zip(report.y_vertices, report.y_classes):
        by_class[cls].append(y)
    n_vertices = tuple(by_class["half"])
    y_order = n_vertices + tuple(by_class["full"]) + tuple(by_class["zero"])
    return BlockDecomposition(
        x_vertices=x_vertices,
        b=tuple(tuple(int(g.has_edge(x, z)) for z in x_vertices) for x in x_vertices),
        n_vertices=n_vertices,
        j_vertices=tuple(by_class["full"]),
        o_vertices=tuple(by_class["zero"]),
        n_block=tuple(tuple(int(g.has_edge(x, y)) for y in n_vertices) for x in x_vertices),
        c=tuple(tuple(int(g.has_edge(y, z)) for z in y_order) for y in y_order),
    )


def enumerate_switching_sets(g: Graph, size: int, cocliques_only: bool = False) -> list[tuple[int, ...]]:
    """All switching sets of ``size`` vertices, in lexicographic order."""
    if size < 1 or size > g.n:
        return []
    results: list[tuple[int, ...]] = []
    chosen: list[int] = []
    visited = 0

    def admissible_count(count: int, room: int) -> bool:
        # can ``count`` still reach 0, size/2 or size with at most ``room`` more members?
        if count == 0:
            return True
        if 2 * count <= size and size % 2 == 0 and 2 * (count + room) >= size:
            return True
        return count <= size <= count + room

    def extend(start: int, mask: int) -> None:
        nonlocal visited
        visited += 1
        depth = len(chosen)
        room = size - depth
        if depth:
            degrees = [(g.adj[v] & mask).bit_count() for v in chosen]
            if max(degrees) - min(degrees) > room:
                return
            for y in range(chosen[-1]):
                if not mask >> y & 1 and not admissible_count((g.adj[y] & mask).bit_count(), room):
                    return
        if room == 0:
            if is_switching_set(g, chosen):
                results.append(tuple(chosen))
            return
        for v in range(start, g.n - room + 1):
            if cocliques_only and g.adj[v] & mask:
                continue
            chosen.append(v)
            extend(v + 1, mask | 1 << v)
            chosen.pop()

    extend(0, 0)
    logger.debug("enumerate_switching_sets n=%d size=%d nodes=%d found=%d", g.n, size, visited, len(results))
    return results


def switch_rows_only(g: Graph, vertices: Iterable[int]) -> Matrix:
    """``Q A`` with ``Q = diag((2/|X|) J - I, I)``: the switch applied to the rows of X only."""
    x_vertices = sorted(set(vertices))
    if not is_switching_set(g, x_vertices):
        raise SwitchingError(f"{x_vertices} is not a switching set")
    q = eye(g.n)
    weight = Rational(2, len(x_vertices))
    for a in x_vertices:
        for b in x_vertices:
            q[a, b] = weight - (1 if a == b else 0)
    return q * Matrix(g.matrix())


def block_permutations(g: Graph, vertices: Iterable[int], p: Permutation) -> BlockPermutations | None:
    """Split a permutation fixing X setwise into its X and Y parts and test the three block identities.

    Returns ``None`` when ``p`` does not map X onto itself.
    """
    x_order = tuple(sorted(set(vertices)))
    if p.size != g.n:
        raise SwitchingError(f"permutation of size {p.size} for a graph on {g.n} vertices")
    if p.image_of(x_order) != frozenset(x_order):
        return None
    switched = apply_switching_set(g, x_order)
    x_set = frozenset(x_order)
    y_order = tuple(v for v in range(g.n) if v not in x_set)
    x_index = {x: k for k, x in enumerate(x_order)}
    y_index = {y: k for k, y in enumerate(y_order)}
    return BlockPermutations(
        x_order=x_order,
        y_order=y_order,
        p=Permutation(tuple(x_index[p(x)] for x in x_order)),
        q=Permutation(tuple(y_index[p(y)] for y in y_order)),
        b_preserved=all(g.has_edge(p(a), p(b)) == g.has_edge(a, b) for a in x_order for b in x_order),
        m_mapped=all(switched.has_edge(p(x), p(y)) == g.has_edge(x, y) for x in x_order for y in y_order),
        c_preserved=all(g.has_edge(p(a), p(b)) == g.has_edge(a, b) for a in y_order for b in y_order),
    )
