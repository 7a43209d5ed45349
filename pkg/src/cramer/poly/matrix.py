"""Matrices of polynomials and their minors."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from cramer.errors import DimensionError
from cramer.exact.matrix import RatMatrix
from cramer.poly.multipoly import MultiPoly, PointLike
from cramer.poly.table import VariableTable, m, n


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[MultiPoly, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        if self.entries and len({e.table for e in self.entries}) != 1:
            raise DimensionError("entries must share one variable table")

    @classmethod
    def symbolic_m(cls, table: VariableTable) -> PolyMatrix:
        """The r x t matrix of coordinates m_ij."""
        r, t = table.r, table.t
        entries = (MultiPoly.variable(table, m(i, j)) for i in range(r) for j in range(t))
        return cls(r, t, tuple(entries))

    @classmethod
    def symbolic_n(cls, table: VariableTable) -> PolyMatrix:
        """The t x s matrix of coordinates n_ij."""
        t, s = table.t, table.s
        entries = (MultiPoly.variable(table, n(i, j)) for i in range(t) for j in range(s))
        return cls(t, s, tuple(entries))

    @property
    def table(self) -> VariableTable:
        return self.entries[0].table

    def __getitem__(self, index: tuple[int, int]) -> MultiPoly:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        table = self.table
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = MultiPoly.zero(table)
                for k in range(self.cols):
                    acc = acc + self[i, k] * other[k, j]
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, tuple(out))

    def eval(self, point: PointLike | Sequence) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, tuple(e.eval(point) for e in self.entries))

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> MultiPoly:
        return MinorCache(self).minor(rows, cols)


class MinorCache:
    """Laplace expansion along rows, memoized on the remaining column tuple.

    One cache serves a whole family of minors over the same row sequence,
    e.g. all r x r minors of M.
    """

    def __init__(self, matrix: PolyMatrix):
        self.matrix = matrix
        self._memo: dict[tuple[tuple[int, ...], tuple[int, ...]], MultiPoly] = {}

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> MultiPoly:
        rows, cols = tuple(rows), tuple(cols)
        pm = self.matrix
        if len(rows) != len(cols):
            raise DimensionError(f"{len(rows)} rows but {len(cols)} columns")
        if len(rows) > min(pm.rows, pm.cols):
            raise DimensionError(f"{len(rows)}x{len(rows)} minor of {pm.rows}x{pm.cols} matrix")
        for i in rows:
            if not 0 <= i < pm.rows:
                raise IndexError(f"row {i} out of range")
        for j in cols:
            if not 0 <= j < pm.cols:
                raise IndexError(f"column {j} out of range")
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            return MultiPoly.zero(pm.table)
        return self._expand(rows, cols)

    def _expand(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> MultiPoly:
        if not rows:
            return MultiPoly.constant(self.matrix.table, 1)
        key = (rows, cols)
        if key in self._memo:
            return self._memo[key]
        head, rest = rows[0], rows[1:]
        acc = MultiPoly.zero(self.matrix.table)
        for pos, c in enumerate(cols):
            entry = self.matrix[head, c]
            if entry.is_zero():
                continue
            sub = self._expand(rest, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        self._memo[key] = acc
        return acc
