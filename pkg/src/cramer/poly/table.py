"""Variable descriptors and fixed-order variable tables."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Literal

from cramer.errors import ParameterError, UnknownVariableError

VarKind = Literal["m", "n", "omega", "t", "x", "xs", "y"]


def _pair(prefix: str, i: int, j: int) -> str:
    # 1-based; wide indices need a separator to stay unambiguous
    a, b = i + 1, j + 1
    if a >= 10 or b >= 10:
        return f"{prefix}{a}c{b}"
    return f"{prefix}{a}{b}"


@dataclass(frozen=True, order=True)
class Var:
    """One coordinate. Indices are 0-based; ``name`` is 1-based."""

    kind: VarKind
    i: int = -1
    j: int = -1

    @property
    def name(self) -> str:
        match self.kind:
            case "m" | "n":
                return _pair(self.kind, self.i, self.j)
            case "xs":
                return _pair("x", self.i, self.j)
            case "y":
                return f"y{self.i + 1}"
            case _:
                return self.kind

    def __str__(self) -> str:
        return self.name


OMEGA = Var("omega")
T = Var("t")


def m(i: int, j: int) -> Var:
    return Var("m", i, j)


def n(i: int, j: int) -> Var:
    return Var("n", i, j)


@dataclass(frozen=True)
class VariableTable:
    """Ordered, duplicate-free list of variables.

    Cramer tables list M row-major, then N row-major, then omega, then t.
    """

    variables: tuple[Var, ...]
    r: int = 0
    s: int = 0
    _index: dict[Var, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {v: k for k, v in enumerate(self.variables)}
        if len(index) != len(self.variables):
            raise ParameterError("variable descriptors must be unique")
        names = {v.name for v in self.variables}
        if len(names) != len(self.variables):
            raise ParameterError("variable names must be unique")
        object.__setattr__(self, "_index", index)

    @classmethod
    def cramer(
        cls, r: int, s: int, omega: bool = True, deformation: bool = False
    ) -> VariableTable:
        if r < 1 or s < 1:
            raise ParameterError(f"need r, s >= 1, got r={r}, s={s}")
        t = r + s
        variables = [m(i, j) for i in range(r) for j in range(t)]
        variables += [n(i, j) for i in range(t) for j in range(s)]
        if omega:
            variables.append(OMEGA)
        if deformation:
            variables.append(T)
        return cls(tuple(variables), r, s)

    @classmethod
    def spinor(cls) -> VariableTable:
        """x, x12 .. x45, y1 .. y5 (16 variables)."""
        variables = [Var("x")]
        variables += [Var("xs", i, j) for i in range(5) for j in range(i + 1, 5)]
        variables += [Var("y", i) for i in range(5)]
        return cls(tuple(variables))

    @classmethod
    def deformation_only(cls) -> VariableTable:
        return cls((T,))

    @property
    def t(self) -> int:
        return self.r + self.s

    @property
    def has_omega(self) -> bool:
        return OMEGA in self._index

    @property
    def has_deformation(self) -> bool:
        return T in self._index

    @property
    def names(self) -> list[str]:
        return [v.name for v in self.variables]

    def index(self, var: Var) -> int:
        try:
            return self._index[var]
        except KeyError:
            raise UnknownVariableError(f"{var.name} is not in the variable table") from None

    def named(self, name: str) -> Var:
        for v in self.variables:
            if v.name == name:
                return v
        raise UnknownVariableError(f"no variable named {name!r}")

    def __contains__(self, var: object) -> bool:
        return var in self._index

    def __iter__(self) -> Iterator[Var]:
        return iter(self.variables)

    def __len__(self) -> int:
        return len(self.variables)
