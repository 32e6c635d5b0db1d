"""Simple undirected graphs on dense vertex labels, stored as bit rows."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Sequence

from gm_switching.errors import GraphError


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``0..n-1``; bit ``u`` of ``adj[v]`` is set iff ``u ~ v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        limit = 1 << self.n
        for v, row in enumerate(self.adj):
            if row < 0 or row >= limit:
                raise GraphError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.neighbor_lists[v]

    @cached_property
    def neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(iter_bits(row)) for row in self.adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for v in range(self.n) for u in iter_bits(self.adj[v]) if u < v)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def matrix(self) -> list[list[int]]:
        return [[row >> u & 1 for u in range(self.n)] for row in self.adj]

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph on ``vertices``, relabeled in increasing order."""
        order = sorted(set(vertices))
        self.check_vertices(order)
        return graph_from_edges(
            len(order),
            [(a, b) for a, b in combinations(range(len(order)), 2) if self.has_edge(order[a], order[b])],
        )

    def check_vertices(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for a graph on {self.n} vertices")


def iter_bits(row: int) -> Iterable[int]:
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``0..n-1``; ``images[v]`` is the image of ``v``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise GraphError(f"not a permutation of 0..{len(self.images) - 1}: {list(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(n))
        for cycle in cycles:
            for index, v in enumerate(cycle):
                if not 0 <= v < n:
                    raise GraphError(f"cycle entry {v} out of range for size {n}")
                images[v] = cycle[(index + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def inverse(self) -> Permutation:
        images = [0] * self.size
        for v, w in enumerate(self.images):
            images[w] = v
        return Permutation(tuple(images))

    def compose(self, other: Permutation) -> Permutation:
        """``self`` after ``other``."""
        if other.size != self.size:
            raise GraphError(f"cannot compose permutations of sizes {self.size} and {other.size}")
        return Permutation(tuple(self.images[w] for w in other.images))

    def image_of(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[v] for v in vertices)

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def graph_from_matrix(rows: Sequence[Sequence[int]]) -> Graph:
    n = len(rows)
    edges: list[tuple[int, int]] = []
    for u, row in enumerate(rows):
        if len(row) != n:
            raise GraphError(f"adjacency row {u} has length {len(row)}, expected {n}")
        for v, entry in enumerate(row):
            if entry not in (0, 1):
                raise GraphError(f"adjacency entry ({u}, {v}) is {entry}, expected 0 or 1")
            if entry != rows[v][u]:
                raise GraphError(f"adjacency matrix is not symmetric at ({u}, {v})")
            if entry and u < v:
                edges.append((u, v))
        if row[u]:
            raise GraphError(f"loop edge ({u}, {u})")
    return graph_from_edges(n, edges)


def apply_permutation(g: Graph, p: Permutation) -> Graph:
    """Relabel ``g`` so that ``(p(u), p(v))`` is an edge iff ``(u, v)`` is."""
    if p.size != g.n:
        raise GraphError(f"permutation of size {p.size} applied to a graph on {g.n} vertices")
    rows = [0] * g.n
    for v in range(g.n):
        rows[p(v)] = vertex_mask(p(u) for u in g.neighbors(v))
    return Graph(g.n, tuple(rows))


def build_grid(l: int, m: int) -> Graph:
    """Lattice graph L(l, m): cell ``(r, c)`` has label ``r * m + c``."""
    if l < 1 or m < 1:
        raise GraphError(f"grid dimensions must be positive, got {l}x{m}")
    edges = [
        (r1 * m + c1, r2 * m + c2)
        for (r1, c1), (r2, c2) in combinations([(r, c) for r in range(l) for c in range(m)], 2)
        if (r1 == r2) != (c1 == c2)
    ]
    return graph_from_edges(l * m, edges)


def triangular_label(i: int, j: int) -> int:
    """Colex position of the pair ``{i, j}``: 01, 02, 12, 03, 13, 23, ..."""
    low, high = min(i, j), max(i, j)
    if low == high or low < 0:
        raise GraphError(f"invalid pair {{{i}, {j}}}")
    return high * (high - 1) // 2 + low


def build_triangular(m: int) -> Graph:
    """Triangular graph T(m) on the pairs of ``0..m-1`` in colex order."""
    if m < 2:
        raise GraphError(f"triangular graph needs m >= 2, got {m}")
    pairs = sorted(combinations(range(m), 2), key=lambda pair: (pair[1], pair[0]))
    edges = [
        (triangular_label(*a), triangular_label(*b))
        for a, b in combinations(pairs, 2)
        if len(set(a) & set(b)) == 1
    ]
    return graph_from_edges(len(pairs), edges)


def _complete(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def _empty(n: int) -> Graph:
    return graph_from_edges(n, [])


def _path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs at least one vertex, got {n}")
    return graph_from_edges(n, [(v, v + 1) for v in range(n - 1)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least three vertices, got {n}")
    return graph_from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def _star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return graph_from_edges(k + 1, [(0, v) for v in range(1, k + 1)])


def _complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


_CATALOG: dict[str, tuple[Callable[..., Graph], int]] = {
    "complete": (_complete, 1),
    "empty": (_empty, 1),
    "path": (_path, 1),
    "cycle": (_cycle, 1),
    "star": (_star, 1),
    "complete_bipartite": (_complete_bipartite, 2),
}

CATALOG_NAMES = tuple(sorted(_CATALOG))


def build_named(name: str, *params: int) -> Graph:
    try:
        factory, arity = _CATALOG[name]
    except KeyError as exc:
        raise GraphError(f"unknown graph {name!r}; expected one of {', '.join(CATALOG_NAMES)}") from exc
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} parameter(s), got {len(params)}")
    if any(value < 0 for value in params):
        raise GraphError(f"{name} parameters must be non-negative, got {list(params)}")
    return factory(*params)
