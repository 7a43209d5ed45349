"""Concrete points (M, N, omega) of the ambient space."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from cramer.errors import DimensionError
from cramer.exact.matrix import RatMatrix
from cramer.exact.rational import as_rational, format_rational, parse_rational
from cramer.poly.table import OMEGA, Var, VariableTable


@dataclass(frozen=True)
class ConfigurationPoint:
    """M is r x t, N is t x s with t = r + s; omega is None in omega-less mode."""

    M: RatMatrix
    N: RatMatrix
    omega: Fraction | None = None

    def __post_init__(self):
        r, t = self.M.shape
        if self.N.rows != t:
            raise DimensionError(f"M is {r}x{t} but N has {self.N.rows} rows")
        if t != r + self.N.cols:
            raise DimensionError(f"t = {t} must equal r + s = {r} + {self.N.cols}")
        if self.omega is not None:
            object.__setattr__(self, "omega", as_rational(self.omega))

    @property
    def r(self) -> int:
        return self.M.rows

    @property
    def s(self) -> int:
        return self.N.cols

    @property
    def t(self) -> int:
        return self.M.cols

    @property
    def has_omega(self) -> bool:
        return self.omega is not None

    def without_omega(self) -> ConfigurationPoint:
        return ConfigurationPoint(self.M, self.N, None)

    def with_omega(self, omega) -> ConfigurationPoint:
        return ConfigurationPoint(self.M, self.N, as_rational(omega))

    def coordinate(self, var: Var) -> Fraction:
        match var.kind:
            case "m":
                return self.M[var.i, var.j]
            case "n":
                return self.N[var.i, var.j]
            case "omega" if self.omega is not None:
                return self.omega
        raise DimensionError(f"point has no coordinate {var.name}")

    def values_for(self, table: VariableTable) -> tuple[Fraction, ...]:
        """Coordinates in table order; the table must match (r, s) and omega mode."""
        if (table.r, table.s) != (self.r, self.s):
            raise DimensionError(
                f"point is for (r, s) = ({self.r}, {self.s}), table for ({table.r}, {table.s})"
            )
        if table.has_omega != self.has_omega:
            raise DimensionError("omega mode of point and table differ")
        return tuple(self.coordinate(v) for v in table)

    @classmethod
    def from_values(cls, table: VariableTable, values: Sequence) -> ConfigurationPoint:
        if len(values) != len(table):
            raise DimensionError(f"{len(values)} values for {len(table)} variables")
        lookup = dict(zip(table, (as_rational(v) for v in values)))
        r, s, t = table.r, table.s, table.t
        M = RatMatrix(r, t, tuple(lookup[Var("m", i, j)] for i in range(r) for j in range(t)))
        N = RatMatrix(t, s, tuple(lookup[Var("n", i, j)] for i in range(t) for j in range(s)))
        return cls(M, N, lookup.get(OMEGA))

    def to_dict(self) -> dict[str, Any]:
        return {
            "M": self.M.to_strings(),
            "N": self.N.to_strings(),
            "omega": None if self.omega is None else format_rational(self.omega),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ConfigurationPoint:
        M = RatMatrix.from_rows([[parse_rational(e) for e in row] for row in data["M"]])
        N = RatMatrix.from_rows([[parse_rational(e) for e in row] for row in data["N"]])
        omega = data.get("omega")
        return cls(M, N, None if omega is None else parse_rational(omega))
