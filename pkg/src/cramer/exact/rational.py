"""Exact rational scalars.

``Rational`` is :class:`fractions.Fraction`; it is always stored in lowest
terms with a positive denominator, and zero is ``0/1``.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


def as_rational(value: int | str | Fraction | _RationalABC) -> Fraction:
    """Coerce ints, fractions and ``"p/q"`` strings into a Fraction.

    Floats are rejected so that nothing inexact leaks into the core.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Render as ``p/q`` even when q = 1 (export format)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
