"""Tensor and strengthened tensor products, and switching structure lifted into them.

Vertex ``(i, x)`` of a product of ``h`` and ``g`` carries the label ``i * g.n + x``.
"""

from __future__ import annotations

from typing import Callable, Iterable

from gm_switching.errors import GraphError, SwitchingError
from gm_switching.graph import Graph, build_named
from gm_switching.invariants import ProductKind
from gm_switching.switching import SwitchingPartition, is_switching_set, validate_partition


def _kronecker_rows(h: Graph, g: Graph, closed: bool) -> tuple[int, ...]:
    rows: list[int] = []
    for i in range(h.n):
        factors = h.adj[i] | (1 << i if closed else 0)
        for x in range(g.n):
            row = 0
            for j in range(h.n):
                if factors >> j & 1:
                    row |= g.adj[x] << (j * g.n)
            rows.append(row)
    return tuple(rows)


def tensor(h: Graph, g: Graph) -> Graph:
    """Adjacency ``E (x) A``."""
    return Graph(h.n * g.n, _kronecker_rows(h, g, closed=False))


def strengthened_tensor(h: Graph, g: Graph) -> Graph:
    """Adjacency ``(E + I) (x) A``."""
    return Graph(h.n * g.n, _kronecker_rows(h, g, closed=True))


def coclique_extension(n: int, g: Graph) -> Graph:
    if n < 1:
        raise GraphError(f"coclique extension needs n >= 1, got {n}")
    return strengthened_tensor(build_named("complete", n), g)


PRODUCTS: dict[ProductKind, Callable[[Graph, Graph], Graph]] = {
    "tensor": tensor,
    "strengthened": strengthened_tensor,
}


def product(kind: ProductKind, h: Graph, g: Graph) -> Graph:
    return PRODUCTS[kind](h, g)


def closed_common_neighbors(h: Graph, i: int, j: int) -> int:
    """Common neighbors of ``i`` and ``j`` once every vertex of ``h`` carries a loop."""
    h.check_vertices((i, j))
    return ((h.adj[i] | 1 << i) & (h.adj[j] | 1 << j)).bit_count()


def _require_set(g: Graph, vertices: Iterable[int]) -> list[int]:
    members = sorted(set(vertices))
    if not members or not is_switching_set(g, members):
        raise SwitchingError(f"{members} is not a switching set")
    return members


def lift_switching_set(h: Graph, i: int, vertices: Iterable[int], g: Graph) -> frozenset[int]:
    members = _require_set(g, vertices)
    h.check_vertices((i,))
    lifted = frozenset(i * g.n + x for x in members)
    for kind in PRODUCTS:
        if not is_switching_set(product(kind, h, g), lifted):
            raise SwitchingError(f"lift of {members} through vertex {i} is not a switching set in the {kind} product")
    return lifted


def product_switching_partition(h: Graph, vertices: Iterable[int], g: Graph, kind: ProductKind) -> SwitchingPartition:
    """Cells ``{i} x X`` for every vertex ``i`` of ``h``."""
    members = _require_set(g, vertices)
    partition = SwitchingPartition.of([i * g.n + x for x in members] for i in range(h.n))
    if not validate_partition(product(kind, h, g), partition).valid:
        raise SwitchingError(f"lifted partition of {members} is not valid in the {kind} product")
    return partition
