"""Transition Jacobians between charts, the canonical differential and the Cartier check."""

from __future__ import annotations

import logging
from fractions import Fraction

from cramer.charts.chart import ChartAtlas, ChartMap
from cramer.errors import ChartDomainError, VerificationError
from cramer.exact.matrix import RatMatrix, det
from cramer.exact.rational import format_rational
from cramer.group.action import orbit_sample
from cramer.types import CartierReport, PairStatus
from cramer.variety.point import ConfigurationPoint

logger = logging.getLogger(__name__)

OVERLAP_RETRIES = 5


def transition_jacobian(source: ChartMap, target: ChartMap, p: ConfigurationPoint) -> RatMatrix:
    """d(target free coordinates) / d(source free coordinates) at p, both in table order."""
    if source.table != target.table:
        raise VerificationError("charts live on different varieties")
    values = p.values_for(source.table)
    pivot = source.pivot.eval(values)
    if pivot == 0:
        raise ChartDomainError(f"pivot of chart {source.name} vanishes at the point")
    pivot_partials = None
    position = {v: k for k, v in enumerate(source.free)}
    rows = []
    for var in target.free:
        if var in position:
            rows.append([Fraction(int(k == position[var])) for k in range(source.dimension)])
            continue
        if var not in source.solved:
            raise VerificationError(f"{var.name} is neither free nor solved in {source.name}")
        if pivot_partials is None:
            pivot_partials = [source.pivot.partial(f).eval(values) for f in source.free]
        partials, numerator, power = source.expression_partials(var)
        num = numerator.eval(values)
        denom = pivot ** (power + 1)
        rows.append(
            [
                (d.eval(values) * pivot - power * num * dp) / denom
                for d, dp in zip(partials, pivot_partials)
            ]
        )
    return RatMatrix.from_rows(rows, source.dimension)


def transition_jacobian_det(
    source: ChartMap, target: ChartMap, p: ConfigurationPoint, check: bool = True
) -> Fraction:
    """Oriented Jacobian determinant of the change of chart at p.

    Equals (pivot_target(p) / pivot_source(p))^s exactly; with ``check`` a
    mismatch raises VerificationError.
    """
    pivot_source = source.require_domain(p)
    pivot_target = target.require_domain(p)
    if source is target:
        return Fraction(1)
    raw = det(transition_jacobian(source, target, p))
    oriented = source.orientation * target.orientation * raw
    expected = (pivot_target / pivot_source) ** source.sigma_power
    if check and oriented != expected:
        raise VerificationError(
            f"det J({source.name} -> {target.name}) = {oriented}, expected {expected}"
        )
    return oriented


def sigma_ratio(
    source: ChartMap, target: ChartMap, p: ConfigurationPoint, jac: Fraction | None = None
) -> Fraction:
    """sigma_source / sigma_target at p; ``jac`` reuses an oriented det already computed."""
    if jac is None:
        jac = transition_jacobian_det(source, target, p, check=False)
    return (
        jac
        * source.pivot_at(p) ** source.sigma_power
        / target.pivot_at(p) ** target.sigma_power
    )


def sigma_consistency(
    p: ConfigurationPoint,
    T1,
    T2,
    atlas: ChartAtlas | None = None,
) -> bool:
    """The local expressions of the canonical differential agree on the overlap."""
    atlas = atlas or ChartAtlas(p.r, p.s)
    return sigma_ratio(atlas.chart(T1), atlas.chart(T2), p) == 1


def is_adjacent(source: ChartMap, target: ChartMap) -> bool:
    if source.subset is None or target.subset is None:
        return False
    return len(set(source.subset) & set(target.subset)) == len(source.subset) - 1


def block_shape_holds(source: ChartMap, target: ChartMap, p: ConfigurationPoint) -> bool:
    """Shape of J for adjacent pivot charts.

    Rows of shared coordinates are unit rows; the rows of the N row that becomes
    free, against the N row that becomes solved, form c * I_s with
    c = +-(M_target / M_source).
    """
    if not is_adjacent(source, target):
        raise VerificationError(f"{source.name} and {target.name} are not adjacent")
    J = transition_jacobian(source, target, p)
    shared = set(source.free)
    for k, var in enumerate(target.free):
        if var in shared:
            col = source.free.index(var)
            if any(J[k, c] != (1 if c == col else 0) for c in range(source.dimension)):
                return False

    (gained,) = set(source.subset) - set(target.subset)
    (lost,) = set(target.subset) - set(source.subset)
    rows = [k for k, v in enumerate(target.free) if v.kind == "n" and v.i == gained]
    cols = [c for c, v in enumerate(source.free) if v.kind == "n" and v.i == lost]
    block = J.submatrix(rows, cols)
    diag = {block[k, k] for k in range(block.rows)}
    if len(diag) != 1:
        return False
    (c,) = diag
    if block != RatMatrix.identity(block.rows).scale(c):
        return False
    ratio = target.pivot_at(p) / source.pivot_at(p)
    return c in (ratio, -ratio)


def cartier_cover_report(
    r: int,
    s: int,
    samples: int,
    seed: int = 0,
    bound: int = 5,
    atlas: ChartAtlas | None = None,
    jobs: int = 1,
) -> CartierReport:
    """Check that (M_T1 / M_T2)^s is a unit on every overlap of the pivot cover.

    Each ordered pair is tested at up to ``samples`` orbit points lying in
    both charts, where the oriented Jacobian determinant must equal
    (M_T2 / M_T1)^s. Pairs with no point in the overlap are inconclusive.
    """
    atlas = atlas or ChartAtlas(r, s)
    pool = orbit_sample(r, s, seed, samples, bound, jobs=jobs)
    charts = atlas.charts()
    statuses: list[PairStatus] = []

    for source in charts:
        for target in charts:
            overlap = _overlap(pool, source, target, samples)
            retry = 0
            while not overlap and retry < OVERLAP_RETRIES:
                retry += 1
                extra = orbit_sample(r, s, seed + retry, samples, bound, jobs=jobs)
                overlap = _overlap(extra, source, target, samples)
            pair = {
                "source": [k + 1 for k in source.subset],
                "target": [k + 1 for k in target.subset],
            }
            if not overlap:
                logger.warning(f"no overlap sample for {source.name} / {target.name}")
                statuses.append(PairStatus(**pair, status="inconclusive"))
                continue

            status, witness = "pass", overlap[0]
            for p in overlap:
                expected = (target.pivot_at(p) / source.pivot_at(p)) ** s
                if transition_jacobian_det(source, target, p, check=False) != expected:
                    status, witness = "fail", p
                    break
            ratio = (source.pivot_at(witness) / target.pivot_at(witness)) ** s
            statuses.append(
                PairStatus(
                    **pair,
                    status=status,
                    transition=format_rational(ratio),
                    witness=witness.to_dict(),
                )
            )
    return CartierReport(r=r, s=s, samples=samples, pairs=statuses)


def _overlap(points, source: ChartMap, target: ChartMap, limit: int):
    inside = [p for p in points if source.pivot_at(p) != 0 and target.pivot_at(p) != 0]
    return inside[:limit]
