"""One-parameter subgroups and their t -> 0 limits."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from cramer.errors import LimitError, VerificationError
from cramer.exact.matrix import RatMatrix
from cramer.group.action import base_point
from cramer.poly.matrix import PolyMatrix
from cramer.poly.multipoly import MultiPoly
from cramer.poly.table import OMEGA, T, Var, VariableTable
from cramer.types import Stratum
from cramer.variety.ideal import CramerIdeal, generate_ideal, validate_shape
from cramer.variety.point import ConfigurationPoint
from cramer.variety.strata import classify
from cramer.weights.characters import coordinate_weight, standard_cocharacter


@dataclass(frozen=True)
class OneParamPoint:
    """(M(t), N(t), omega(t)) with polynomial entries in t."""

    M: PolyMatrix
    N: PolyMatrix
    omega: MultiPoly | None

    @property
    def table(self) -> VariableTable:
        return self.M.table

    def entries(self) -> dict[Var, MultiPoly]:
        r, t, s = self.M.rows, self.M.cols, self.N.cols
        out = {Var("m", i, j): self.M[i, j] for i in range(r) for j in range(t)}
        out |= {Var("n", i, j): self.N[i, j] for i in range(t) for j in range(s)}
        if self.omega is not None:
            out[OMEGA] = self.omega
        return out

    def at(self, value) -> ConfigurationPoint:
        """Specialize t to a rational value."""
        point = (Fraction(value),)
        M = RatMatrix(self.M.rows, self.M.cols, tuple(e.eval(point) for e in self.M.entries))
        N = RatMatrix(self.N.rows, self.N.cols, tuple(e.eval(point) for e in self.N.entries))
        omega = None if self.omega is None else self.omega.eval(point)
        return ConfigurationPoint(M, N, omega)

    def limit(self) -> ConfigurationPoint:
        return self.at(0)

    def satisfies(self, ideal: CramerIdeal) -> bool:
        """Every generator vanishes identically in t along the path."""
        images = self.entries()
        return all(g.poly.substitute(images, self.table).is_zero() for g in ideal.generators)


def one_param_path(
    r: int,
    s: int,
    point: ConfigurationPoint | None = None,
    cocharacter: Sequence[int] | None = None,
) -> OneParamPoint:
    """Apply P(t) to a point: each coordinate scales by t to its weight paired with P.

    The default subgroup is T_A = I, T_B = diag(1, .., t, .., 1) with t in slot
    r + 1, T_C = I, applied to the base point.
    """
    validate_shape(r, s)
    point = point or base_point(r, s)
    cocharacter = tuple(cocharacter or standard_cocharacter(r, s))
    cramer_table = VariableTable.cramer(r, s, omega=point.has_omega)
    table = VariableTable.deformation_only()

    def scaled(var: Var) -> MultiPoly:
        value = point.coordinate(var)
        if value == 0:
            return MultiPoly.zero(table)
        power = coordinate_weight(var, cramer_table).pairing(cocharacter)
        if power < 0:
            raise LimitError(f"{var.name} picks up t^{power}; the limit does not exist")
        return MultiPoly.monomial(table, {T: power}, value)

    t = r + s
    M = PolyMatrix(r, t, tuple(scaled(Var("m", i, j)) for i in range(r) for j in range(t)))
    N = PolyMatrix(t, s, tuple(scaled(Var("n", i, j)) for i in range(t) for j in range(s)))
    omega = scaled(OMEGA) if point.has_omega else None
    return OneParamPoint(M, N, omega)


def one_param_limit(r: int, s: int) -> ConfigurationPoint:
    """t -> 0 limit of P(t) . v; it must land in the divisor V1."""
    path = one_param_path(r, s)
    limit = path.limit()
    stratum = classify(limit, generate_ideal(r, s))
    if stratum is not Stratum.DIVISOR_V1:
        raise VerificationError(f"limit point classifies as {stratum.value}, not Divisor_V1")
    return limit
