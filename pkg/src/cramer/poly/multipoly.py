"""Sparse multivariate polynomials over the rationals."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Protocol, Union, runtime_checkable

from cramer.errors import DimensionError, TableError
from cramer.exact.rational import as_rational, format_rational
from cramer.poly.table import Var, VariableTable

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


@runtime_checkable
class PointLike(Protocol):
    """Anything that can list its coordinates in a table's order."""

    def values_for(self, table: VariableTable) -> tuple[Fraction, ...]: ...


def grlex_key(exps: Exponents) -> tuple[int, Exponents]:
    return (sum(exps), exps)


class MultiPoly:
    """Map from exponent vectors to nonzero Fraction coefficients.

    Values are immutable; every operation returns a new polynomial.
    """

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: VariableTable, terms: Mapping[Exponents, Scalar] | None = None):
        self.table = table
        size = len(table)
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != size:
                raise DimensionError(f"exponent vector of length {len(exps)}, table has {size}")
            coeff = as_rational(coeff)
            if coeff != 0:
                clean[tuple(exps)] = coeff
        self._terms = clean
        self._hash: int | None = None

    # Constructors

    @classmethod
    def zero(cls, table: VariableTable) -> MultiPoly:
        return cls(table)

    @classmethod
    def constant(cls, table: VariableTable, value: Scalar) -> MultiPoly:
        return cls(table, {(0,) * len(table): value})

    @classmethod
    def variable(cls, table: VariableTable, var: Var) -> MultiPoly:
        exps = [0] * len(table)
        exps[table.index(var)] = 1
        return cls(table, {tuple(exps): 1})

    @classmethod
    def monomial(cls, table: VariableTable, powers: Mapping[Var, int], coeff: Scalar = 1):
        exps = [0] * len(table)
        for var, k in powers.items():
            exps[table.index(var)] += k
        return cls(table, {tuple(exps): coeff})

    # Inspection

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending graded-lex order of the table."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, var: Var) -> int:
        k = self.table.index(var)
        return max((e[k] for e in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def variables(self) -> list[Var]:
        used = {k for e in self._terms for k, p in enumerate(e) if p}
        return [v for k, v in enumerate(self.table) if k in used]

    def coefficient(self, powers: Mapping[Var, int]) -> Fraction:
        exps = [0] * len(self.table)
        for var, k in powers.items():
            exps[self.table.index(var)] = k
        return self._terms.get(tuple(exps), Fraction(0))

    # Arithmetic

    def _coerce(self, other: MultiPoly | Scalar) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.table != self.table:
                raise TableError("polynomials belong to different variable tables")
            return other
        return MultiPoly.constant(self.table, other)

    def __add__(self, other: MultiPoly | Scalar) -> MultiPoly:
        other = self._coerce(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return MultiPoly(self.table, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.table, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: MultiPoly | Scalar) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other: MultiPoly | Scalar) -> MultiPoly:
        other = self._coerce(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, Fraction(0)) + c1 * c2
        return MultiPoly(self.table, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.table, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, factor: Scalar) -> MultiPoly:
        factor = as_rational(factor)
        return MultiPoly(self.table, {e: c * factor for e, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.table == other.table and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.table, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self._terms.items())))
        return self._hash

    # Calculus and evaluation

    def partial(self, var: Var) -> MultiPoly:
        k = self.table.index(var)
        terms: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            if exps[k]:
                lowered = exps[:k] + (exps[k] - 1,) + exps[k + 1 :]
                terms[lowered] = coeff * exps[k]
        return MultiPoly(self.table, terms)

    def eval(self, point: PointLike | Sequence[Scalar]) -> Fraction:
        """Exact value at a point, or at values listed in table order."""
        if isinstance(point, PointLike):
            values = point.values_for(self.table)
        else:
            values = tuple(as_rational(v) for v in point)
        if len(values) != len(self.table):
            raise DimensionError(f"{len(values)} values for {len(self.table)} variables")
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for value, p in zip(values, exps):
                if p:
                    term *= value**p
            total += term
        return total

    def substitute(
        self,
        images: Mapping[Var, MultiPoly | Scalar],
        target: VariableTable | None = None,
    ) -> MultiPoly:
        """Replace variables by polynomials over ``target`` (default: same table).

        Variables without an image map to the same variable of ``target``.
        """
        target = target or self.table
        columns: list[MultiPoly] = []
        for var in self.table:
            if var in images:
                image = images[var]
                if not isinstance(image, MultiPoly):
                    image = MultiPoly.constant(target, image)
                elif image.table != target:
                    raise TableError(f"image of {var.name} is over a different table")
                columns.append(image)
            else:
                columns.append(MultiPoly.variable(target, var))
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(k: int, p: int) -> MultiPoly:
            if (k, p) not in powers:
                powers[(k, p)] = columns[k] ** p
            return powers[(k, p)]

        result = MultiPoly.zero(target)
        for exps, coeff in self._terms.items():
            term = MultiPoly.constant(target, coeff)
            for k, p in enumerate(exps):
                if p:
                    term = term * power(k, p)
            result = result + term
        return result

    def specialize(self, values: Mapping[Var, Scalar]) -> MultiPoly:
        """Fix some variables to constants, staying on the same table."""
        return self.substitute({v: as_rational(c) for v, c in values.items()})

    # Printing

    def _monomial_str(self, exps: Exponents) -> str:
        parts = []
        for var, p in zip(self.table, exps):
            if p == 1:
                parts.append(var.name)
            elif p > 1:
                parts.append(f"{var.name}^{p}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, (exps, coeff) in enumerate(self.sorted_terms()):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            mono = self._monomial_str(exps)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                out.append(f"-{body}" if sign == "-" else body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_terms(self) -> list[dict]:
        """JSON-ready terms: ``{"coeff": "p/q", "exponents": [...]}``."""
        return [
            {"coeff": format_rational(c), "exponents": list(e)} for e, c in self.sorted_terms()
        ]


def poly_sum(polys: Iterable[MultiPoly], table: VariableTable) -> MultiPoly:
    total = MultiPoly.zero(table)
    for p in polys:
        total = total + p
    return total
