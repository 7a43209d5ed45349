"""Defining ideal of the Cramer variety Cr(r, r+s, s)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Literal

from cramer.errors import ParameterError, PreconditionError
from cramer.exact.matrix import RatMatrix, rank
from cramer.poly.matrix import MinorCache, PolyMatrix
from cramer.poly.multipoly import MultiPoly
from cramer.poly.table import OMEGA, VariableTable
from cramer.types import OmegaMode
from cramer.variety.point import ConfigurationPoint

logger = logging.getLogger(__name__)


def validate_shape(r: int, s: int) -> None:
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    if r > s:
        raise ParameterError(f"need r <= s, got r={r}, s={s}")


def pivot_subsets(r: int, s: int) -> list[tuple[int, ...]]:
    """All r-subsets of range(r + s), lexicographic."""
    return list(combinations(range(r + s), r))


def complement(subset: tuple[int, ...], t: int) -> tuple[int, ...]:
    return tuple(k for k in range(t) if k not in subset)


def minor_sign_exponent(subset: tuple[int, ...]) -> int:
    """Exponent e with sign(T) = (-1)^e, from the 1-based sum of T plus r(r+1)/2."""
    r = len(subset)
    return sum(k + 1 for k in subset) + r * (r + 1) // 2


def minor_sign(subset: tuple[int, ...]) -> int:
    return -1 if minor_sign_exponent(subset) % 2 else 1


@dataclass(frozen=True)
class GeneratorLabel:
    kind: Literal["bilinear", "minor_match"]
    index: tuple[int, ...]

    def __str__(self) -> str:
        inner = ",".join(str(k + 1) for k in self.index)
        name = "Bilinear" if self.kind == "bilinear" else "MinorMatch"
        return f"{name}({inner})"


@dataclass(frozen=True)
class Generator:
    label: GeneratorLabel
    poly: MultiPoly
    sign_exponent: int | None = None


@dataclass(frozen=True)
class CramerIdeal:
    r: int
    s: int
    omega_mode: OmegaMode
    table: VariableTable
    generators: tuple[Generator, ...]

    @property
    def t(self) -> int:
        return self.r + self.s

    @property
    def polys(self) -> list[MultiPoly]:
        return [g.poly for g in self.generators]

    @property
    def labels(self) -> list[str]:
        return [str(g.label) for g in self.generators]

    @property
    def bilinear(self) -> list[Generator]:
        return [g for g in self.generators if g.label.kind == "bilinear"]

    @property
    def minor_match(self) -> list[Generator]:
        return [g for g in self.generators if g.label.kind == "minor_match"]

    def __len__(self) -> int:
        return len(self.generators)

    @cached_property
    def jacobian(self) -> list[list[MultiPoly]]:
        """Symbolic partials, one row per generator."""
        return [[g.poly.partial(v) for v in self.table] for g in self.generators]


def expected_generator_count(r: int, s: int) -> int:
    return r * s + comb(r + s, r)


def expected_codimension(r: int, s: int) -> int:
    """rs + 1, i.e. ts + 1 - s^2, in both omega modes."""
    return r * s + 1


def ambient_dimension(ideal: CramerIdeal) -> int:
    return len(ideal.table)


def generate_ideal(r: int, s: int, omega_mode: OmegaMode = OmegaMode.WITH_OMEGA) -> CramerIdeal:
    """Bilinear entries of MN, then sign(T) * omega * M_T - N_{T^c} for every r-subset T."""
    validate_shape(r, s)
    omega_mode = OmegaMode(omega_mode)
    with_omega = omega_mode is OmegaMode.WITH_OMEGA
    table = VariableTable.cramer(r, s, omega=with_omega)
    t = r + s
    M = PolyMatrix.symbolic_m(table)
    N = PolyMatrix.symbolic_n(table)

    generators: list[Generator] = []
    product = M @ N
    for i in range(r):
        for j in range(s):
            generators.append(Generator(GeneratorLabel("bilinear", (i, j)), product[i, j]))

    m_minors = MinorCache(M)
    n_minors = MinorCache(N.transpose())
    omega = MultiPoly.variable(table, OMEGA) if with_omega else MultiPoly.constant(table, 1)
    for subset in pivot_subsets(r, s):
        exponent = minor_sign_exponent(subset)
        lhs = m_minors.minor(range(r), subset)
        rhs = n_minors.minor(range(s), complement(subset, t))
        poly = (omega * lhs).scale(minor_sign(subset)) - rhs
        generators.append(Generator(GeneratorLabel("minor_match", subset), poly, exponent))

    logger.debug(f"generated {len(generators)} generators for Cr({r},{t},{s}) {omega_mode.value}")
    return CramerIdeal(r, s, omega_mode, table, tuple(generators))


def evaluate_ideal(ideal: CramerIdeal, p: ConfigurationPoint) -> list:
    values = p.values_for(ideal.table)
    return [g.poly.eval(values) for g in ideal.generators]


def on_variety(ideal: CramerIdeal, p: ConfigurationPoint) -> bool:
    return all(v == 0 for v in evaluate_ideal(ideal, p))


def jacobian_at(ideal: CramerIdeal, p: ConfigurationPoint) -> RatMatrix:
    values = p.values_for(ideal.table)
    rows = [[d.eval(values) for d in row] for row in ideal.jacobian]
    return RatMatrix.from_rows(rows, len(ideal.table))


def jacobian_rank_at(ideal: CramerIdeal, p: ConfigurationPoint) -> int:
    """Rank of the matrix of partials at a point of the variety."""
    values = evaluate_ideal(ideal, p)
    bad = [label for label, v in zip(ideal.labels, values) if v != 0]
    if bad:
        raise PreconditionError(f"point is not on the variety: {', '.join(bad)} nonzero")
    return rank(jacobian_at(ideal, p))


def pivot_free_coordinates(table: VariableTable, subset: tuple[int, ...]) -> list:
    """Free coordinates of the chart M_T != 0: every m_ij and the N rows outside T."""
    return [v for v in table if v.kind == "m" or (v.kind == "n" and v.i not in subset)]
