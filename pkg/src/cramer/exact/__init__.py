"""Exact rational arithmetic kernel."""

from cramer.exact.matrix import (
    DEFAULT_BOUND,
    RatMatrix,
    det,
    inverse,
    random_invertible,
    random_matrix,
    rank,
    rref,
)
from cramer.exact.rational import Rational, as_rational, format_rational, parse_rational

__all__ = [
    "DEFAULT_BOUND",
    "RatMatrix",
    "Rational",
    "as_rational",
    "det",
    "format_rational",
    "inverse",
    "parse_rational",
    "random_invertible",
    "random_matrix",
    "rank",
    "rref",
]
