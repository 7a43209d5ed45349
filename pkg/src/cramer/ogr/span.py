"""Linear spans of quadrics, canonicalized by reduced row echelon form."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement

from cramer.errors import ParameterError, TableError
from cramer.exact.matrix import RatMatrix, rref
from cramer.poly.multipoly import Exponents, MultiPoly, grlex_key
from cramer.poly.table import VariableTable


def quadratic_monomials(table: VariableTable) -> list[Exponents]:
    """All degree-2 exponent vectors, in descending graded-lex order."""
    size = len(table)
    out = []
    for i, j in combinations_with_replacement(range(size), 2):
        exps = [0] * size
        exps[i] += 1
        exps[j] += 1
        out.append(tuple(exps))
    return sorted(out, key=grlex_key, reverse=True)


@dataclass(frozen=True)
class QuadricSpan:
    table: VariableTable
    monomials: tuple[Exponents, ...]
    matrix: RatMatrix  # nonzero RREF rows only

    @property
    def rank(self) -> int:
        return self.matrix.rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadricSpan):
            return NotImplemented
        return self.table == other.table and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.table, self.matrix))


def quadric_span(qs: Sequence[MultiPoly]) -> QuadricSpan:
    if not qs:
        raise ParameterError("need at least one quadric")
    table = qs[0].table
    if any(q.table != table for q in qs):
        raise TableError("quadrics belong to different variable tables")
    for q in qs:
        if not q.is_homogeneous(2):
            raise ParameterError(f"not a quadratic form: {q}")
    monomials = quadratic_monomials(table)
    rows = [[q.terms.get(mono, 0) for mono in monomials] for q in qs]
    reduced, pivots = rref(RatMatrix.from_rows(rows, len(monomials)))
    kept = reduced.submatrix(range(len(pivots)), range(len(monomials)))
    return QuadricSpan(table, tuple(monomials), kept)
