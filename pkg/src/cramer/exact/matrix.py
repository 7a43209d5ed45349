"""Dense rational matrices with fraction-free elimination."""

from __future__ import annotations

import logging
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from cramer.errors import DimensionError, ParameterError, SamplingError, SingularMatrixError
from cramer.exact.rational import as_rational, format_rational

logger = logging.getLogger(__name__)

DEFAULT_BOUND = 5
RETRY_BUDGET = 100


@dataclass(frozen=True)
class RatMatrix:
    """Immutable row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative shape {self.rows}x{self.cols}")
        entries = tuple(as_rational(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    # Construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RatMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence) -> RatMatrix:
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> RatMatrix:
        """Matrix P with P e_j = e_perm[j]."""
        n = len(perm)
        return cls(n, n, tuple(int(perm[j] == i) for i in range(n) for j in range(n)))

    @classmethod
    def hstack(cls, *blocks: RatMatrix) -> RatMatrix:
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise DimensionError("hstack needs equal row counts")
        return cls.from_rows(
            [[e for b in blocks for e in b.row(i)] for i in range(rows)],
            sum(b.cols for b in blocks),
        )

    @classmethod
    def vstack(cls, *blocks: RatMatrix) -> RatMatrix:
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise DimensionError("vstack needs equal column counts")
        return cls(sum(b.rows for b in blocks), cols, tuple(e for b in blocks for e in b.entries))

    # Access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(e) for e in self.row(i)] for i in range(self.rows)]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> RatMatrix:
        rows, cols = list(rows), list(cols)
        return RatMatrix.from_rows([[self[i, j] for j in cols] for i in rows], len(cols))

    def replace(self, i: int, j: int, value) -> RatMatrix:
        entries = list(self.entries)
        entries[i * self.cols + j] = value
        return RatMatrix(self.rows, self.cols, tuple(entries))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    # Arithmetic

    def transpose(self) -> RatMatrix:
        return RatMatrix.from_rows([list(self.col(j)) for j in range(self.cols)], self.rows)

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        summed = tuple(a + b for a, b in zip(self.entries, other.entries))
        return RatMatrix(self.rows, self.cols, summed)

    def __neg__(self) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self + (-other)

    def scale(self, factor) -> RatMatrix:
        factor = as_rational(factor)
        return RatMatrix(self.rows, self.cols, tuple(factor * e for e in self.entries))

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.cols)]
        return RatMatrix.from_rows(
            [[sum((a * b for a, b in zip(self.row(i), c)), Fraction(0)) for c in cols]
             for i in range(self.rows)],
            other.cols,
        )

    def __str__(self) -> str:
        rows = (" ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return "[" + "; ".join(rows) + "]"


def det(m: RatMatrix) -> Fraction:
    """Determinant by Bareiss elimination. The empty matrix has determinant 1."""
    if not m.is_square:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = m.to_rows()
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m: RatMatrix) -> int:
    """Exact rank via fraction-free row reduction."""
    a = m.to_rows()
    rows, cols = m.rows, m.cols
    r = 0
    prev = Fraction(1)
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            factor = a[i][c]
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * a[r][c] - factor * a[r][j]) / prev
            a[i][c] = Fraction(0)
        prev = a[r][c]
        r += 1
    return r


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan)."""
    a = m.to_rows()
    rows, cols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        lead = a[r][c]
        a[r] = [e / lead for e in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RatMatrix.from_rows(a, cols), tuple(pivots)


def inverse(m: RatMatrix) -> RatMatrix:
    if not m.is_square:
        raise DimensionError(f"inverse of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    reduced, pivots = rref(RatMatrix.hstack(m, RatMatrix.identity(n)))
    if pivots[:n] != tuple(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is not invertible")
    return reduced.submatrix(range(n), range(n, 2 * n))


def random_matrix(
    rows: int, cols: int, rng: random.Random, bound: int = DEFAULT_BOUND
) -> RatMatrix:
    return RatMatrix(rows, cols, tuple(rng.randint(-bound, bound) for _ in range(rows * cols)))


def random_invertible(n: int, seed: int, bound: int = DEFAULT_BOUND) -> RatMatrix:
    """Seeded n x n integer matrix with entries in [-bound, bound] and nonzero determinant."""
    if n < 1:
        raise DimensionError(f"matrix size must be >= 1, got {n}")
    if bound < 1:
        raise ParameterError(f"bound must be >= 1, got {bound}")
    rng = random.Random(seed)
    for attempt in range(RETRY_BUDGET):
        m = random_matrix(n, n, rng, bound)
        if det(m) != 0:
            if attempt:
                logger.debug(f"random_invertible: {attempt} singular draws resampled")
            return m
    raise SamplingError(f"no invertible {n}x{n} matrix after {RETRY_BUDGET} draws")
