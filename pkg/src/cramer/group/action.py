"""The GL(r) x GL(t) x GL(s) action on (M, N, omega)."""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from cramer.errors import DimensionError, ParameterError, SingularMatrixError, VerificationError
from cramer.exact.matrix import DEFAULT_BOUND, RatMatrix, det, inverse, random_invertible
from cramer.parallel import pmap
from cramer.types import OmegaMode
from cramer.variety.ideal import evaluate_ideal, generate_ideal, validate_shape
from cramer.variety.point import ConfigurationPoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupElement:
    """(A, B, C) with A in GL(r), B in GL(t), C in GL(s)."""

    A: RatMatrix
    B: RatMatrix
    C: RatMatrix

    def __post_init__(self):
        for name, mat in (("A", self.A), ("B", self.B), ("C", self.C)):
            if not mat.is_square:
                raise DimensionError(f"{name} must be square, got {mat.rows}x{mat.cols}")
        if self.B.rows != self.A.rows + self.C.rows:
            raise DimensionError(f"B is {self.B.rows}x{self.B.rows}, expected t = r + s")
        for name, mat in (("A", self.A), ("B", self.B), ("C", self.C)):
            if det(mat) == 0:
                raise SingularMatrixError(f"{name} is singular")

    @classmethod
    def identity(cls, r: int, s: int) -> GroupElement:
        return cls(RatMatrix.identity(r), RatMatrix.identity(r + s), RatMatrix.identity(s))

    @classmethod
    def random(cls, r: int, s: int, rng: random.Random, bound: int = DEFAULT_BOUND):
        return cls(
            random_invertible(r, rng.getrandbits(64), bound),
            random_invertible(r + s, rng.getrandbits(64), bound),
            random_invertible(s, rng.getrandbits(64), bound),
        )

    @property
    def r(self) -> int:
        return self.A.rows

    @property
    def s(self) -> int:
        return self.C.rows

    @property
    def lam(self) -> Fraction:
        """det(B) / (det(A) det(C)), the factor on omega."""
        return det(self.B) / (det(self.A) * det(self.C))

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.A @ other.A, self.B @ other.B, self.C @ other.C)

    def inverse(self) -> GroupElement:
        return GroupElement(inverse(self.A), inverse(self.B), inverse(self.C))


def normalize_lambda(g: GroupElement) -> GroupElement:
    """Rescale the first row of A so that lambda(g) = 1."""
    lam = g.lam
    rows = g.A.to_rows()
    rows[0] = [lam * e for e in rows[0]]
    return GroupElement(RatMatrix.from_rows(rows), g.B, g.C)


def base_point(r: int, s: int, omega_mode: OmegaMode = OmegaMode.WITH_OMEGA) -> ConfigurationPoint:
    """v: M = (I | 0), N = (0 over I), omega = 1."""
    validate_shape(r, s)
    M = RatMatrix.hstack(RatMatrix.identity(r), RatMatrix.zeros(r, s))
    N = RatMatrix.vstack(RatMatrix.zeros(r, s), RatMatrix.identity(s))
    omega = Fraction(1) if OmegaMode(omega_mode) is OmegaMode.WITH_OMEGA else None
    return ConfigurationPoint(M, N, omega)


def act(g: GroupElement, p: ConfigurationPoint) -> ConfigurationPoint:
    """M -> A M B^-1, N -> B N C^-1, omega -> lambda * omega."""
    if (g.r, g.s) != (p.r, p.s):
        raise DimensionError(f"group element for ({g.r}, {g.s}) on point for ({p.r}, {p.s})")
    b_inv = inverse(g.B)
    M = g.A @ p.M @ b_inv
    N = g.B @ p.N @ inverse(g.C)
    omega = None if p.omega is None else g.lam * p.omega
    return ConfigurationPoint(M, N, omega)


def stabilizer_shape_holds(g: GroupElement) -> bool:
    """B = [[A, 0], [*, C]]."""
    r, t = g.r, g.r + g.s
    B = g.B
    return (
        B.submatrix(range(r), range(r)) == g.A
        and B.submatrix(range(r), range(r, t)).is_zero()
        and B.submatrix(range(r, t), range(r, t)) == g.C
    )


def is_in_stabilizer(g: GroupElement, r: int, s: int) -> bool:
    if (g.r, g.s) != (r, s):
        raise DimensionError(f"group element for ({g.r}, {g.s}), asked about ({r}, {s})")
    v = base_point(r, s)
    fixed = act(g, v) == v
    if fixed != stabilizer_shape_holds(g):
        raise VerificationError("stabilizer block test disagrees with the fixed-point test")
    return fixed


def orbit_dimension(r: int, s: int) -> int:
    """dim G - dim H = r^2 + rs + s^2, which must equal rt + s^2."""
    validate_shape(r, s)
    t = r + s
    dim_g = r * r + t * t + s * s
    dim_h = r * r + s * s + r * s
    result = dim_g - dim_h
    if result != r * t + s * s:
        raise VerificationError(f"orbit dimension {result} != rt + s^2 = {r * t + s * s}")
    return result


def _act_pair(pair: tuple[GroupElement, ConfigurationPoint]) -> ConfigurationPoint:
    g, p = pair
    return act(g, p)


def orbit_sample(
    r: int,
    s: int,
    seed: int,
    count: int,
    bound: int = DEFAULT_BOUND,
    omega_mode: OmegaMode = OmegaMode.WITH_OMEGA,
    include_base_point: bool = False,
    jobs: int = 1,
) -> list[ConfigurationPoint]:
    """``count`` points g_k . v for seeded random g_k, each checked against the ideal.

    In omega-less mode every g_k is rescaled to lambda = 1 so the orbit stays
    on the omega-less variety.
    """
    if count < 1:
        raise ParameterError(f"count must be >= 1, got {count}")
    omega_mode = OmegaMode(omega_mode)
    rng = random.Random(seed)
    elements = []
    for k in range(count):
        if include_base_point and k == 0:
            g = GroupElement.identity(r, s)
        else:
            g = GroupElement.random(r, s, rng, bound)
        if omega_mode is OmegaMode.OMEGA_LESS:
            g = normalize_lambda(g)
        elements.append(g)

    v = base_point(r, s, omega_mode)
    points = pmap(_act_pair, [(g, v) for g in elements], jobs)

    ideal = generate_ideal(r, s, omega_mode)
    for k, p in enumerate(points):
        if any(val != 0 for val in evaluate_ideal(ideal, p)):
            raise VerificationError(f"orbit sample {k} is not on the variety")
    logger.debug(f"sampled {count} orbit points for ({r}, {s}) seed={seed}")
    return points


def _check_permutation(perm: Sequence[int], size: int, name: str) -> tuple[int, ...]:
    perm = tuple(perm)
    if len(perm) != size:
        raise DimensionError(f"{name} has length {len(perm)}, expected {size}")
    if sorted(perm) != list(range(size)):
        raise ParameterError(f"{name} is not a permutation of 0..{size - 1}")
    return perm


def permutation_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def weyl_element(perms: tuple[Sequence[int], Sequence[int], Sequence[int]]) -> GroupElement:
    sigma_r, sigma_t, sigma_s = perms
    return GroupElement(
        RatMatrix.permutation(sigma_r),
        RatMatrix.permutation(sigma_t),
        RatMatrix.permutation(sigma_s),
    )


def weyl_act(
    perms: tuple[Sequence[int], Sequence[int], Sequence[int]], p: ConfigurationPoint
) -> ConfigurationPoint:
    """Row and column permutations: sigma_r on M rows, sigma_t on M columns and N rows,
    sigma_s on N columns; omega picks up the product of the three signs.
    """
    sigma_r = _check_permutation(perms[0], p.r, "sigma_r")
    sigma_t = _check_permutation(perms[1], p.t, "sigma_t")
    sigma_s = _check_permutation(perms[2], p.s, "sigma_s")

    m_rows = [[Fraction(0)] * p.t for _ in range(p.r)]
    for i in range(p.r):
        for j in range(p.t):
            m_rows[sigma_r[i]][sigma_t[j]] = p.M[i, j]
    n_rows = [[Fraction(0)] * p.s for _ in range(p.t)]
    for i in range(p.t):
        for j in range(p.s):
            n_rows[sigma_t[i]][sigma_s[j]] = p.N[i, j]

    omega = p.omega
    if omega is not None:
        sign = permutation_sign(sigma_r) * permutation_sign(sigma_t) * permutation_sign(sigma_s)
        omega = omega * sign
    return ConfigurationPoint(
        RatMatrix.from_rows(m_rows, p.t), RatMatrix.from_rows(n_rows, p.s), omega
    )
