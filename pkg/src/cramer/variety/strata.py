"""Boundary strata of the orbit closure."""

from __future__ import annotations

from fractions import Fraction

from cramer.errors import VerificationError
from cramer.exact.matrix import RatMatrix, rank
from cramer.types import OmegaMode, Stratum
from cramer.variety.ideal import CramerIdeal, evaluate_ideal, validate_shape
from cramer.variety.point import ConfigurationPoint


def classify(p: ConfigurationPoint, ideal: CramerIdeal) -> Stratum:
    """Stratum of p; omega counts as 1 for omega-less ideals."""
    if any(v != 0 for v in evaluate_ideal(ideal, p)):
        return Stratum.OFF_VARIETY
    omega = p.omega if ideal.omega_mode is OmegaMode.WITH_OMEGA else Fraction(1)
    rank_m, rank_n = rank(p.M), rank(p.N)
    r, s = ideal.r, ideal.s

    if rank_m < r:
        return Stratum.CASE2 if omega != 0 else Stratum.CASE3
    if omega != 0:
        if rank_n != s:
            raise VerificationError(f"rank N = {rank_n} < s with full-rank M and omega != 0")
        return Stratum.OPEN_ORBIT
    if rank_n == s - 1:
        return Stratum.DIVISOR_V1
    return Stratum.CASE1_DEEP


def divisor_representative(r: int, s: int) -> ConfigurationPoint:
    """M = (I_r | 0), N = 0_{(r+1) x s} over (I_{s-1} | 0), omega = 0."""
    validate_shape(r, s)
    M = RatMatrix.hstack(RatMatrix.identity(r), RatMatrix.zeros(r, s))
    rows = [[0] * s for _ in range(r + 1)]
    rows += [[int(j == i) for j in range(s)] for i in range(s - 1)]
    N = RatMatrix.from_rows(rows, s)
    return ConfigurationPoint(M, N, Fraction(0))
