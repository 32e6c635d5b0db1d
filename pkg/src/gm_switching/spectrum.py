"""Exact adjacency characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
import logging

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from gm_switching.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[k]`` is the coefficient of ``x**k``."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x: int) -> int:
        value = 0
        for coefficient in reversed(self.coeffs):
            value = value * x + coefficient
        return value

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return IntPolynomial(tuple(product))

    def scaled(self, factor: int) -> IntPolynomial:
        return IntPolynomial(tuple(factor * c for c in self.coeffs))

    def reflected(self) -> IntPolynomial:
        """``p(-x)``."""
        return IntPolynomial(tuple(-c if k % 2 else c for k, c in enumerate(self.coeffs)))

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            terms.append(f"{sign} {body}")
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def char_poly(g: Graph) -> IntPolynomial:
    """det(xI - A) over the integers, via sympy's division-free algorithm on ``ZZ``."""
    if g.n == 0:
        return IntPolynomial((1,))
    matrix = DomainMatrix([[ZZ(entry) for entry in row] for row in g.matrix()], (g.n, g.n), ZZ)
    leading_first = matrix.charpoly()
    coeffs = tuple(int(c) for c in reversed(leading_first))
    logger.debug("char_poly n=%d edges=%d", g.n, g.edge_count)
    return IntPolynomial(coeffs)


def cospectral(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.adj == h.adj:
        return True
    return char_poly(g) == char_poly(h)
