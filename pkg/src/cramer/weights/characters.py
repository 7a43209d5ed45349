"""Characters of the maximal torus, stored additively as exponent vectors.

Coordinates are ordered (a_1..a_r, b_1..b_t, c_1..c_s). The restricted torus
identifies b_i with a_i for i <= r and b_{r+j} with c_j.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from cramer.errors import DimensionError, UnknownVariableError
from cramer.poly.table import Var, VariableTable


def _format(labels: list[str], exponents: tuple[int, ...]) -> str:
    parts = []
    for label, e in zip(labels, exponents):
        if e == 0:
            continue
        mag = "" if abs(e) == 1 else f"{abs(e)}*"
        sign = "-" if e < 0 else "+"
        parts.append(f"{sign}{mag}{label}")
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[1:] if text.startswith("+") else text


@dataclass(frozen=True)
class Character:
    r: int
    s: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.r + self.t + self.s:
            raise DimensionError(f"character needs {self.r + self.t + self.s} exponents")

    @property
    def t(self) -> int:
        return self.r + self.s

    @classmethod
    def trivial(cls, r: int, s: int) -> Character:
        return cls(r, s, (0,) * (2 * (r + s)))

    @classmethod
    def basis(cls, r: int, s: int, block: str, i: int) -> Character:
        """Unit character a_i, b_i or c_i (0-based i)."""
        offset = {"a": 0, "b": r, "c": 2 * r + s}[block]
        size = {"a": r, "b": r + s, "c": s}[block]
        if not 0 <= i < size:
            raise DimensionError(f"{block}{i + 1} out of range")
        exps = [0] * (2 * (r + s))
        exps[offset + i] = 1
        return cls(r, s, tuple(exps))

    @property
    def a(self) -> tuple[int, ...]:
        return self.exponents[: self.r]

    @property
    def b(self) -> tuple[int, ...]:
        return self.exponents[self.r : self.r + self.t]

    @property
    def c(self) -> tuple[int, ...]:
        return self.exponents[self.r + self.t :]

    def _check(self, other: Character) -> None:
        if (self.r, self.s) != (other.r, other.s):
            raise DimensionError("characters of different tori")

    def __add__(self, other: Character) -> Character:
        self._check(other)
        summed = tuple(x + y for x, y in zip(self.exponents, other.exponents))
        return Character(self.r, self.s, summed)

    def __neg__(self) -> Character:
        return Character(self.r, self.s, tuple(-x for x in self.exponents))

    def __sub__(self, other: Character) -> Character:
        return self + (-other)

    def __mul__(self, k: int) -> Character:
        return Character(self.r, self.s, tuple(k * x for x in self.exponents))

    __rmul__ = __mul__

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def restrict(self) -> RestrictedCharacter:
        a = [x + y for x, y in zip(self.a, self.b[: self.r])]
        c = [x + y for x, y in zip(self.c, self.b[self.r :])]
        return RestrictedCharacter(self.r, self.s, tuple(a + c))

    def evaluate(self, a: Sequence, b: Sequence, c: Sequence) -> Fraction:
        """Value of the character at diag(a), diag(b), diag(c)."""
        value = Fraction(1)
        for base, e in zip([*a, *b, *c], self.exponents):
            value *= Fraction(base) ** e
        return value

    def pairing(self, cocharacter: Sequence[int]) -> int:
        """<chi, lambda> for a cocharacter given by exponents over the same coordinates."""
        if len(cocharacter) != len(self.exponents):
            raise DimensionError("cocharacter has the wrong length")
        return sum(x * y for x, y in zip(self.exponents, cocharacter))

    def labels(self) -> list[str]:
        return (
            [f"a{i + 1}" for i in range(self.r)]
            + [f"b{i + 1}" for i in range(self.t)]
            + [f"c{i + 1}" for i in range(self.s)]
        )

    def __str__(self) -> str:
        return _format(self.labels(), self.exponents)


@dataclass(frozen=True)
class RestrictedCharacter:
    r: int
    s: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.r + self.s:
            raise DimensionError(f"restricted character needs {self.r + self.s} exponents")

    @classmethod
    def trivial(cls, r: int, s: int) -> RestrictedCharacter:
        return cls(r, s, (0,) * (r + s))

    @classmethod
    def of(cls, r: int, s: int, a: Sequence[int], c: Sequence[int]) -> RestrictedCharacter:
        return cls(r, s, tuple(a) + tuple(c))

    @property
    def a(self) -> tuple[int, ...]:
        return self.exponents[: self.r]

    @property
    def c(self) -> tuple[int, ...]:
        return self.exponents[self.r :]

    def __add__(self, other: RestrictedCharacter) -> RestrictedCharacter:
        if (self.r, self.s) != (other.r, other.s):
            raise DimensionError("characters of different tori")
        summed = tuple(x + y for x, y in zip(self.exponents, other.exponents))
        return RestrictedCharacter(self.r, self.s, summed)

    def __neg__(self) -> RestrictedCharacter:
        return RestrictedCharacter(self.r, self.s, tuple(-x for x in self.exponents))

    def __sub__(self, other: RestrictedCharacter) -> RestrictedCharacter:
        return self + (-other)

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __str__(self) -> str:
        labels = [f"a{i + 1}" for i in range(self.r)] + [f"c{j + 1}" for j in range(self.s)]
        return _format(labels, self.exponents)


def omega_weight(r: int, s: int) -> Character:
    """Sum(b) - Sum(a) - Sum(c)."""
    t = r + s
    return Character(r, s, (-1,) * r + (1,) * t + (-1,) * s)


def coordinate_weight(var: Var, table: VariableTable) -> Character:
    """m_ij -> a_i - b_j, n_ij -> b_i - c_j, omega -> Sum(b) - Sum(a) - Sum(c)."""
    if var not in table:
        raise UnknownVariableError(f"{var.name} is not in the variable table")
    r, s = table.r, table.s
    match var.kind:
        case "m":
            return Character.basis(r, s, "a", var.i) - Character.basis(r, s, "b", var.j)
        case "n":
            return Character.basis(r, s, "b", var.i) - Character.basis(r, s, "c", var.j)
        case "omega":
            return omega_weight(r, s)
    raise UnknownVariableError(f"{var.name} carries no torus weight")


def standard_cocharacter(r: int, s: int) -> tuple[int, ...]:
    """t in slot b_{r+1}, 1 elsewhere."""
    exps = [0] * (2 * (r + s))
    exps[r + r] = 1
    return tuple(exps)
