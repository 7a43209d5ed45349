"""Spinor quadrics of OGr(5,10) in the 16 coordinates x, x_ij (i < j), y_i.

Q_i: x * y_i - eps_i * Pf_i(X)       (Pf_i omits index i)
L_i: sum_j X_ij * y_j                 (X skew, X_ij = -x_ji for i > j)

The signs eps_i are whichever global convention makes the rational
parametrization x = 1, x_ij = Xi_ij, y_i = eps_i * Pf_i(Xi) satisfy all ten.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable
from fractions import Fraction
from functools import lru_cache
from typing import Literal, TypeVar

from cramer.errors import VerificationError
from cramer.exact.matrix import RatMatrix
from cramer.poly.multipoly import MultiPoly, poly_sum
from cramer.poly.table import Var, VariableTable

logger = logging.getLogger(__name__)

SignConvention = Literal["alternating", "all-plus"]
CONVENTIONS: tuple[SignConvention, ...] = ("alternating", "all-plus")
SIZE = 5

E = TypeVar("E")


@lru_cache(maxsize=1)
def spinor_table() -> VariableTable:
    return VariableTable.spinor()


def convention_signs(convention: SignConvention) -> tuple[int, ...]:
    if convention == "alternating":
        return tuple((-1) ** i for i in range(SIZE))
    return (1,) * SIZE


def pfaffian4(entry: Callable[[int, int], E], idx: tuple[int, int, int, int]) -> E:
    """Pf of the 4 x 4 skew block on idx (a < b < c < d): x_ab x_cd - x_ac x_bd + x_ad x_bc."""
    a, b, c, d = idx
    return entry(a, b) * entry(c, d) - entry(a, c) * entry(b, d) + entry(a, d) * entry(b, c)


def omitted(i: int) -> tuple[int, int, int, int]:
    return tuple(k for k in range(SIZE) if k != i)


def _skew_var(table: VariableTable) -> Callable[[int, int], MultiPoly]:
    def entry(i: int, j: int) -> MultiPoly:
        if i == j:
            return MultiPoly.zero(table)
        if i < j:
            return MultiPoly.variable(table, Var("xs", i, j))
        return -MultiPoly.variable(table, Var("xs", j, i))

    return entry


def spinor_quadrics_for(convention: SignConvention) -> list[MultiPoly]:
    table = spinor_table()
    X = _skew_var(table)
    x = MultiPoly.variable(table, Var("x"))
    y = [MultiPoly.variable(table, Var("y", i)) for i in range(SIZE)]
    eps = convention_signs(convention)
    quadrics = [x * y[i] - pfaffian4(X, omitted(i)).scale(eps[i]) for i in range(SIZE)]
    for i in range(SIZE):
        quadrics.append(poly_sum((X(i, j) * y[j] for j in range(SIZE) if j != i), table))
    return quadrics


def random_skew(rng: random.Random, bound: int = 5) -> RatMatrix:
    rows = [[Fraction(0)] * SIZE for _ in range(SIZE)]
    for i in range(SIZE):
        for j in range(i + 1, SIZE):
            value = Fraction(rng.randint(-bound, bound))
            rows[i][j], rows[j][i] = value, -value
    return RatMatrix.from_rows(rows)


def parametrize(xi: RatMatrix, convention: SignConvention, scale=1) -> tuple[Fraction, ...]:
    """Spinor coordinates (table order) of the point attached to a skew 5 x 5 matrix."""
    scale = Fraction(scale)

    def entry(i: int, j: int) -> Fraction:
        return xi[i, j]

    eps = convention_signs(convention)
    values = [scale]
    values += [scale * xi[i, j] for i in range(SIZE) for j in range(i + 1, SIZE)]
    values += [scale * eps[i] * pfaffian4(entry, omitted(i)) for i in range(SIZE)]
    return tuple(values)


def parametrization_holds(convention: SignConvention, seed: int = 0, samples: int = 20) -> bool:
    quadrics = spinor_quadrics_for(convention)
    rng = random.Random(seed)
    points = [RatMatrix.zeros(SIZE, SIZE)] + [random_skew(rng) for _ in range(samples)]
    for xi in points:
        values = parametrize(xi, convention)
        if any(q.eval(values) != 0 for q in quadrics):
            return False
    return True


@lru_cache(maxsize=1)
def choose_convention() -> SignConvention:
    """First sign convention passing the parametrization oracle."""
    for convention in CONVENTIONS:
        if parametrization_holds(convention):
            logger.debug(f"spinor sign convention: {convention}")
            return convention
    raise VerificationError("no sign convention satisfies the spinor parametrization")


def ogr_quadrics() -> list[MultiPoly]:
    """The ten four-term spinor quadrics under the verified sign convention."""
    return spinor_quadrics_for(choose_convention())
