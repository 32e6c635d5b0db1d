"""Isomorphism, set-fixing isomorphism and automorphism groups.

Both graphs are colored jointly by 1-dimensional Weisfeiler-Leman refinement;
when the partition is stable but not discrete, the lowest-labeled vertex of
the first smallest non-singleton cell is individualized in the first graph and
matched in turn against every vertex of the same cell in the second graph.
Every witness is checked edge by edge before it is returned.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
import logging
from typing import Iterable, Iterator, Sequence

from gm_switching.errors import GraphError
from gm_switching.graph import Graph, Permutation, apply_permutation

logger = logging.getLogger(__name__)

Coloring = list[int]


@dataclass(frozen=True)
class AutomorphismGroup:
    generators: tuple[Permutation, ...]
    order: int
    orbit_partition: tuple[tuple[int, ...], ...]
    base: tuple[int, ...]


def _signature(g: Graph, v: int, colors: Coloring) -> tuple[int, tuple[tuple[int, int], ...]]:
    return colors[v], tuple(sorted(Counter(colors[u] for u in g.neighbors(v)).items()))


def _refine(g: Graph, h: Graph, cg: Coloring, ch: Coloring) -> tuple[Coloring, Coloring] | None:
    """Refine both colorings to a joint fixed point, or ``None`` if they come apart."""
    classes = len(set(cg))
    while True:
        sig_g = [_signature(g, v, cg) for v in range(g.n)]
        sig_h = [_signature(h, v, ch) for v in range(h.n)]
        if Counter(sig_g) != Counter(sig_h):
            return None
        ids = {sig: index for index, sig in enumerate(sorted(set(sig_g)))}
        cg = [ids[sig] for sig in sig_g]
        ch = [ids[sig] for sig in sig_h]
        if len(ids) == classes:
            return cg, ch
        classes = len(ids)


def _target_cell(colors: Coloring) -> tuple[int, int] | None:
    """Color and lowest vertex of the first smallest non-singleton cell."""
    sizes = Counter(colors)
    candidates = [(size, color) for color, size in sizes.items() if size > 1]
    if not candidates:
        return None
    _, color = min(candidates)
    return color, colors.index(color)


def _individualize(colors: Coloring, v: int) -> Coloring:
    result = list(colors)
    result[v] = max(colors) + 1
    return result


def is_isomorphism(g: Graph, h: Graph, p: Permutation) -> bool:
    """True iff ``apply_permutation(g, p) == h``."""
    if g.n != h.n or p.size != g.n:
        return False
    return apply_permutation(g, p) == h


class _Search:
    def __init__(self, g: Graph, h: Graph) -> None:
        self.g = g
        self.h = h
        self.nodes = 0

    def run(self, cg: Coloring, ch: Coloring) -> Iterator[Permutation]:
        self.nodes += 1
        refined = _refine(self.g, self.h, cg, ch)
        if refined is None:
            return
        cg, ch = refined
        target = _target_cell(cg)
        if target is None:
            position = {color: w for w, color in enumerate(ch)}
            candidate = Permutation(tuple(position[color] for color in cg))
            if is_isomorphism(self.g, self.h, candidate):
                yield candidate
            return
        color, v = target
        fresh_g = _individualize(cg, v)
        for w in range(self.h.n):
            if ch[w] == color:
                yield from self.run(fresh_g, _individualize(ch, w))


def _quick_reject(g: Graph, h: Graph) -> bool:
    return g.n != h.n or g.edge_count != h.edge_count or sorted(g.degrees) != sorted(h.degrees)


def iter_isomorphisms(
    g: Graph, h: Graph, colors_g: Sequence[int] | None = None, colors_h: Sequence[int] | None = None
) -> Iterator[Permutation]:
    """Every isomorphism ``g -> h`` respecting the initial colorings, in search order."""
    if _quick_reject(g, h):
        return
    search = _Search(g, h)
    cg = list(colors_g) if colors_g is not None else [0] * g.n
    ch = list(colors_h) if colors_h is not None else [0] * h.n
    yield from search.run(cg, ch)
    logger.debug("isomorphism search on n=%d exhausted after %d nodes", g.n, search.nodes)


def are_isomorphic(g: Graph, h: Graph) -> Permutation | None:
    return next(iter_isomorphisms(g, h), None)


def _set_coloring(g: Graph, vertices: frozenset[int]) -> list[int]:
    g.check_vertices(vertices)
    return [int(v in vertices) for v in range(g.n)]


def iter_isomorphisms_fixing_set(g: Graph, h: Graph, vertices: Iterable[int]) -> Iterator[Permutation]:
    fixed = frozenset(vertices)
    colors_g = _set_coloring(g, fixed)
    colors_h = _set_coloring(h, fixed)
    return iter_isomorphisms(g, h, colors_g, colors_h)


def isomorphism_fixing_set(g: Graph, h: Graph, vertices: Iterable[int]) -> Permutation | None:
    """An isomorphism ``p`` with ``p(X) = X``; ``None`` means none exists."""
    return next(iter_isomorphisms_fixing_set(g, h, vertices), None)


def _base_path(g: Graph) -> tuple[list[int], list[list[int]]]:
    """Base points and, per level, the cell containing the base point."""
    colors = [0] * g.n
    base: list[int] = []
    cells: list[list[int]] = []
    while True:
        refined = _refine(g, g, colors, colors)
        assert refined is not None
        colors = refined[0]
        target = _target_cell(colors)
        if target is None:
            return base, cells
        color, v = target
        base.append(v)
        cells.append([w for w in range(g.n) if colors[w] == color])
        colors = _individualize(colors, v)


def _pinned_search(g: Graph, prefix: Sequence[int], v: int, w: int) -> Permutation | None:
    """An automorphism fixing ``prefix`` pointwise and mapping ``v`` to ``w``."""
    cg = [0] * g.n
    ch = [0] * g.n
    for point in prefix:
        refined = _refine(g, g, cg, ch)
        if refined is None:
            return None
        cg, ch = _individualize(refined[0], point), _individualize(refined[1], point)
    refined = _refine(g, g, cg, ch)
    if refined is None:
        return None
    cg, ch = refined
    if cg[v] != ch[w]:
        return None
    search = _Search(g, g)
    return next(search.run(_individualize(cg, v), _individualize(ch, w)), None)


class _Orbits:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def absorb(self, p: Permutation) -> None:
        for v, w in enumerate(p.images):
            a, b = self.find(v), self.find(w)
            if a != b:
                self.parent[max(a, b)] = min(a, b)

    def partition(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            groups.setdefault(self.find(v), []).append(v)
        return tuple(tuple(members) for _, members in sorted(groups.items()))


def orbits(g: Graph, generators: Iterable[Permutation]) -> tuple[tuple[int, ...], ...]:
    tracker = _Orbits(g.n)
    for generator in generators:
        if generator.size != g.n:
            raise GraphError(f"generator of size {generator.size} for a graph on {g.n} vertices")
        tracker.absorb(generator)
    return tracker.partition()


def automorphism_group(g: Graph) -> AutomorphismGroup:
    """Generators, order and orbits from a stabiliser chain along the refinement base."""
    base, cells = _base_path(g)
    generators: list[Permutation] = []
    order = 1
    for level in range(len(base) - 1, -1, -1):
        point = base[level]
        tracker = _Orbits(g.n)
        for generator in generators:
            tracker.absorb(generator)
        for w in cells[level]:
            if tracker.find(w) == tracker.find(point):
                continue
            found = _pinned_search(g, base[:level], point, w)
            if found is not None:
                generators.append(found)
                tracker.absorb(found)
        orbit_size = sum(1 for w in cells[level] if tracker.find(w) == tracker.find(point))
        order *= orbit_size
        logger.debug("base level %d point %d orbit %d", level, point, orbit_size)
    return AutomorphismGroup(
        generators=tuple(generators),
        order=order,
        orbit_partition=orbits(g, generators),
        base=tuple(base),
    )
