"""Coordinate charts of the variety: open sets where a pivot polynomial is nonzero."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from cramer.errors import ChartDomainError, DimensionError, ParameterError
from cramer.poly.matrix import MinorCache, PolyMatrix
from cramer.poly.multipoly import MultiPoly
from cramer.poly.table import OMEGA, Var, VariableTable, n
from cramer.variety.ideal import (
    CramerIdeal,
    complement,
    generate_ideal,
    minor_sign,
    pivot_free_coordinates,
    validate_shape,
)
from cramer.variety.point import ConfigurationPoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolvedCoordinate:
    """numerator / pivot^power."""

    numerator: MultiPoly
    power: int = 1


@dataclass(frozen=True, eq=False)
class ChartMap:
    """A chart: free coordinates plus solved ones as rational functions of them.

    ``sigma_power`` and ``orientation`` describe the local canonical
    differential orientation * d(free) / pivot^sigma_power.
    """

    name: str
    ideal: CramerIdeal
    free: tuple[Var, ...]
    solved: Mapping[Var, SolvedCoordinate]
    pivot: MultiPoly
    sigma_power: int
    orientation: int = 1
    subset: tuple[int, ...] | None = None
    _partials: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def table(self) -> VariableTable:
        return self.ideal.table

    @property
    def dimension(self) -> int:
        return len(self.free)

    def pivot_at(self, p: ConfigurationPoint) -> Fraction:
        return self.pivot.eval(p)

    def require_domain(self, p: ConfigurationPoint) -> Fraction:
        value = self.pivot_at(p)
        if value == 0:
            raise ChartDomainError(f"pivot of chart {self.name} vanishes at the point")
        return value

    def coordinates_of(self, p: ConfigurationPoint) -> dict[Var, Fraction]:
        """Free coordinates of a point in the chart domain."""
        self.require_domain(p)
        return {v: p.coordinate(v) for v in self.free}

    def point_from(self, free_values: Mapping[Var, Fraction]) -> ConfigurationPoint:
        """Rebuild the full point from free coordinates."""
        values = [free_values.get(v, Fraction(0)) for v in self.table]
        pivot = self.pivot.eval(values)
        if pivot == 0:
            raise ChartDomainError(f"pivot of chart {self.name} vanishes")
        index = {v: k for k, v in enumerate(self.table)}
        full = list(values)
        for var, sc in self.solved.items():
            full[index[var]] = sc.numerator.eval(values) / pivot**sc.power
        return ConfigurationPoint.from_values(self.table, full)

    def composed(self, poly: MultiPoly) -> MultiPoly:
        """pivot^d * poly(free, solved), with d the largest denominator power; polynomial."""
        terms = []
        for exps, coeff in poly.terms.items():
            term = MultiPoly.constant(self.table, coeff)
            degree = 0
            for var, p in zip(self.table, exps):
                if not p:
                    continue
                if var in self.solved:
                    sc = self.solved[var]
                    term = term * sc.numerator**p
                    degree += p * sc.power
                else:
                    term = term * MultiPoly.variable(self.table, var) ** p
            terms.append((term, degree))
        top = max((d for _, d in terms), default=0)
        total = MultiPoly.zero(self.table)
        for term, d in terms:
            total = total + term * self.pivot ** (top - d)
        return total

    def substitution_holds(self) -> bool:
        """Solved expressions annihilate every generator identically."""
        return all(self.composed(g.poly).is_zero() for g in self.ideal.generators)

    def expression_partials(self, var: Var) -> tuple[list[MultiPoly], MultiPoly, int]:
        """d(numerator)/d(free) for a solved var, with the numerator and its power."""
        if var not in self._partials:
            sc = self.solved[var]
            self._partials[var] = [sc.numerator.partial(f) for f in self.free]
        return self._partials[var], self.solved[var].numerator, self.solved[var].power


def chart_solve(r: int, s: int, subset: Sequence[int]) -> ChartMap:
    """Solve the N rows indexed by T and omega on M_T != 0.

    Rows of N in T follow from MN = 0 by Cramer's rule over M_T; omega is
    sign(T) * N_{T^c} / M_T.
    """
    validate_shape(r, s)
    t = r + s
    subset = tuple(sorted(subset))
    if len(subset) != r or len(set(subset)) != r or not all(0 <= k < t for k in subset):
        raise ParameterError(f"pivot subset must be {r} distinct indices in 0..{t - 1}")

    ideal = generate_ideal(r, s)
    table = ideal.table
    M = PolyMatrix.symbolic_m(table)
    N = PolyMatrix.symbolic_n(table)
    rest = complement(subset, t)
    pivot = MinorCache(M).minor(range(r), subset)

    solved: dict[Var, SolvedCoordinate] = {}
    for j in range(s):
        rhs = []
        for i in range(r):
            acc = MultiPoly.zero(table)
            for k in rest:
                acc = acc - M[i, k] * N[k, j]
            rhs.append(acc)
        for a, row in enumerate(subset):
            entries = []
            for i in range(r):
                for c, col in enumerate(subset):
                    entries.append(rhs[i] if c == a else M[i, col])
            block = PolyMatrix(r, r, tuple(entries))
            solved[n(row, j)] = SolvedCoordinate(MinorCache(block).minor(range(r), range(r)))

    n_rest = MinorCache(N.transpose()).minor(range(s), rest)
    solved[OMEGA] = SolvedCoordinate(n_rest.scale(minor_sign(subset)))

    free = tuple(pivot_free_coordinates(table, subset))
    if len(free) != r * t + s * s:
        raise DimensionError(f"{len(free)} free coordinates, expected rt + s^2")
    label = "M_" + "".join(str(k + 1) for k in subset)
    logger.debug(f"chart {label}: {len(free)} free, {len(solved)} solved")
    return ChartMap(
        name=label,
        ideal=ideal,
        free=free,
        solved=solved,
        pivot=pivot,
        sigma_power=s,
        orientation=minor_sign(subset) ** s,
        subset=subset,
    )


class ChartAtlas:
    """All pivot charts of Cr(r, r+s, s), built on demand and cached."""

    def __init__(self, r: int, s: int):
        validate_shape(r, s)
        self.r = r
        self.s = s
        self._charts: dict[tuple[int, ...], ChartMap] = {}

    @property
    def subsets(self) -> list[tuple[int, ...]]:
        return list(combinations(range(self.r + self.s), self.r))

    def chart(self, subset: Sequence[int]) -> ChartMap:
        key = tuple(sorted(subset))
        if key not in self._charts:
            self._charts[key] = chart_solve(self.r, self.s, key)
        return self._charts[key]

    def charts(self) -> list[ChartMap]:
        return [self.chart(T) for T in self.subsets]
