"""Sparse polynomial arithmetic over a fixed variable table."""

from cramer.poly.matrix import MinorCache, PolyMatrix
from cramer.poly.multipoly import MultiPoly, PointLike, grlex_key, poly_sum
from cramer.poly.table import OMEGA, T, Var, VariableTable, m, n

__all__ = [
    "OMEGA",
    "T",
    "MinorCache",
    "MultiPoly",
    "PointLike",
    "PolyMatrix",
    "Var",
    "VariableTable",
    "grlex_key",
    "m",
    "n",
    "poly_sum",
]
