"""Verification suites: each check turns one property of the variety into a pass/fail."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations

from cramer.charts.chart import ChartAtlas, ChartMap
from cramer.charts.transition import (
    block_shape_holds,
    cartier_cover_report,
    is_adjacent,
    sigma_ratio,
    transition_jacobian_det,
)
from cramer.config import RunConfig
from cramer.errors import ChartDomainError, CramerError, VerificationError
from cramer.group.action import base_point, orbit_dimension, orbit_sample
from cramer.group.limits import one_param_limit, one_param_path
from cramer.ogr.entry import entry_charts
from cramer.ogr.identify import (
    cramer_242_quadrics,
    cross_membership,
    load_coordmap,
    search_identification,
    verify_identification,
)
from cramer.ogr.span import quadric_span
from cramer.ogr.spinor import choose_convention, ogr_quadrics
from cramer.parallel import pmap
from cramer.types import CheckResult, OgrReport, OmegaMode, Stratum, VerifyReport
from cramer.variety.ideal import (
    CramerIdeal,
    ambient_dimension,
    expected_codimension,
    expected_generator_count,
    generate_ideal,
    jacobian_rank_at,
)
from cramer.variety.point import ConfigurationPoint
from cramer.variety.strata import classify
from cramer.weights.theorem import (
    g_mod_h_blocks,
    g_mod_h_weights,
    sigma_weight,
    theorem_character,
    weight_product,
)

logger = logging.getLogger(__name__)

SUITES = ("orbit", "codim", "charts", "cartier", "weights", "limit")


def _pass(name: str, detail: str) -> CheckResult:
    return CheckResult(name=name, status="pass", detail=detail)


def _fail(name: str, detail: str, point: ConfigurationPoint | None = None) -> CheckResult:
    witness = point.to_dict() if point is not None else None
    return CheckResult(name=name, status="fail", detail=detail, witness=witness)


def _skip(name: str, detail: str) -> CheckResult:
    return CheckResult(name=name, status="skipped", detail=detail)


def check_generator_count(ideal: CramerIdeal) -> CheckResult:
    expected = expected_generator_count(ideal.r, ideal.s)
    if len(ideal) != expected:
        detail = f"{len(ideal)} generators, expected rs + C(t, r) = {expected}"
        return _fail("generator_count", detail)
    return _pass("generator_count", f"{expected} generators in {len(ideal.table)} variables")


def check_orbit_vanishing(ideal: CramerIdeal, points: list[ConfigurationPoint]) -> CheckResult:
    for k, p in enumerate(points):
        if classify(p, ideal) is Stratum.OFF_VARIETY:
            return _fail("orbit_vanishing", f"sample {k} is off the variety", p)
    return _pass("orbit_vanishing", f"all generators vanish at {len(points)} orbit samples")


def check_open_orbit(ideal: CramerIdeal, points: list[ConfigurationPoint]) -> CheckResult:
    for k, p in enumerate(points):
        stratum = classify(p, ideal)
        if stratum is not Stratum.OPEN_ORBIT:
            return _fail("open_orbit", f"sample {k} classifies as {stratum.value}", p)
    return _pass("open_orbit", f"{len(points)} samples lie in the open orbit")


def check_codimension(ideal: CramerIdeal, points: list[ConfigurationPoint]) -> CheckResult:
    expected = expected_codimension(ideal.r, ideal.s)
    for p in points:
        found = jacobian_rank_at(ideal, p)
        if found != expected:
            return _fail("codimension", f"Jacobian rank {found}, expected rs + 1 = {expected}", p)
    return _pass("codimension", f"Jacobian rank {expected} at {len(points)} points")


def check_dimension(ideal: CramerIdeal) -> CheckResult:
    """ambient - codim = dim G - dim H, one less without omega."""
    r, s = ideal.r, ideal.s
    dimension = ambient_dimension(ideal) - expected_codimension(r, s)
    expected = orbit_dimension(r, s)
    if ideal.omega_mode is OmegaMode.OMEGA_LESS:
        expected -= 1
    if dimension != expected:
        return _fail("dimension", f"dimension {dimension}, orbit dimension {expected}")
    return _pass("dimension", f"dimension {dimension} = rt + s^2 for the orbit")


@dataclass(frozen=True)
class _PairOutcome:
    """Chart checks for one (source, target, point); ``None`` means not applicable."""

    transition: bool
    sigma: bool
    block: bool | None
    detail: str


def _pair_outcome(
    item: tuple[ChartMap, ChartMap, ConfigurationPoint],
) -> _PairOutcome | None:
    source, target, p = item
    try:
        pivot_source = source.require_domain(p)
        pivot_target = target.require_domain(p)
    except ChartDomainError:
        return None
    detail = f"{source.name} -> {target.name}"
    try:
        jac = transition_jacobian_det(source, target, p, check=False)
    except VerificationError as e:
        return _PairOutcome(False, False, None, str(e))
    expected = (pivot_target / pivot_source) ** source.sigma_power
    block = block_shape_holds(source, target, p) if is_adjacent(source, target) else None
    if jac != expected:
        detail = f"det J({detail}) = {jac}, expected {expected}"
    return _PairOutcome(
        transition=jac == expected,
        sigma=sigma_ratio(source, target, p, jac=jac) == 1,
        block=block,
        detail=detail,
    )


def _summarize(
    name: str,
    items: list[tuple[ChartMap, ChartMap, ConfigurationPoint]],
    outcomes: list[_PairOutcome | None],
    attr: str,
) -> CheckResult:
    tested = 0
    for (_, _, p), outcome in zip(items, outcomes):
        if outcome is None or getattr(outcome, attr) is None:
            continue
        tested += 1
        if not getattr(outcome, attr):
            return _fail(name, outcome.detail, p)
    if tested == 0:
        return CheckResult(name=name, status="inconclusive", detail="no sample in any overlap")
    return _pass(name, f"{tested} chart pairs x points checked")


def check_charts(
    charts: list[ChartMap], points: list[ConfigurationPoint], jobs: int = 1
) -> list[CheckResult]:
    """Transition det, sigma gluing and block shape over every ordered chart pair.

    The determinant is computed once per pair and point and shared by both checks.
    """
    items = [(source, target, p) for source, target in permutations(charts, 2) for p in points]
    outcomes = pmap(_pair_outcome, items, jobs=jobs)
    results = [
        _summarize("transition_det", items, outcomes, "transition"),
        _summarize("sigma_consistency", items, outcomes, "sigma"),
    ]
    if any(c.subset is not None for c in charts):
        results.append(_summarize("block_shape", items, outcomes, "block"))
    return results


def check_weights(r: int, s: int) -> list[CheckResult]:
    results = []
    product = weight_product(g_mod_h_weights(r, s), r, s)
    expected = theorem_character(r, s)
    if product != expected:
        results.append(_fail("weight_product", f"product {product}, expected {expected}"))
    else:
        results.append(_pass("weight_product", f"product of g/h weights is {product}"))

    blocks = g_mod_h_blocks(r, s)
    squares = blocks.get("rr", []) + blocks.get("ss", [])
    square_sum = weight_product(squares, r, s)
    if not square_sum.is_trivial():
        results.append(_fail("square_blocks", f"square blocks contribute {square_sum}"))
    else:
        results.append(_pass("square_blocks", "square blocks contribute the trivial character"))

    try:
        full, restricted = sigma_weight(r, s)
    except VerificationError as e:
        results.append(_fail("sigma_weight", str(e)))
    else:
        detail = f"sigma has weight {full}, restricting to {restricted}"
        results.append(_pass("sigma_weight", detail))
    return results


def check_limit(r: int, s: int) -> list[CheckResult]:
    ideal = generate_ideal(r, s)
    path = one_param_path(r, s)
    results = []
    if path.satisfies(ideal):
        results.append(_pass("path_on_variety", "P(t) . v satisfies every generator in t"))
    else:
        results.append(_fail("path_on_variety", "a generator does not vanish along P(t) . v"))
    try:
        limit = one_param_limit(r, s)
    except VerificationError as e:
        results.append(_fail("limit_stratum", str(e), path.limit()))
    else:
        results.append(
            CheckResult(
                name="limit_stratum",
                status="pass",
                detail="t -> 0 limit lies in Divisor_V1",
                witness=limit.to_dict(),
            )
        )
    return results


class VerificationRunner:
    """Runs the verification suites for one configuration."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.ideal = generate_ideal(config.r, config.s, config.omega_mode)
        self._points: list[ConfigurationPoint] | None = None

    @property
    def omega_less(self) -> bool:
        return self.config.omega_mode is OmegaMode.OMEGA_LESS

    @property
    def points(self) -> list[ConfigurationPoint]:
        """Orbit samples, shared by the suites of one run."""
        if self._points is None:
            cfg = self.config
            self._points = orbit_sample(
                cfg.r, cfg.s, cfg.seed, cfg.samples, cfg.bound, cfg.omega_mode, jobs=cfg.jobs
            )
        return self._points

    def check_orbit(self) -> list[CheckResult]:
        try:
            points = self.points
        except VerificationError as e:
            return [check_generator_count(self.ideal), _fail("orbit_vanishing", str(e))]
        return [
            check_generator_count(self.ideal),
            check_orbit_vanishing(self.ideal, points),
            check_open_orbit(self.ideal, points),
        ]

    def check_codim(self) -> list[CheckResult]:
        v = base_point(self.config.r, self.config.s, self.config.omega_mode)
        return [
            check_codimension(self.ideal, [v, *self.points]),
            check_dimension(self.ideal),
        ]

    def check_charts(self) -> list[CheckResult]:
        r, s = self.config.r, self.config.s
        if self.omega_less:
            if (r, s) != (2, 2):
                return [_skip("charts", "omega-less charts are built for Cr(2,4,2) only")]
            return check_charts(list(entry_charts()), self.points, jobs=self.config.jobs)
        return check_charts(ChartAtlas(r, s).charts(), self.points, jobs=self.config.jobs)

    def check_cartier(self) -> list[CheckResult]:
        if self.omega_less:
            return [_skip("cartier", "the pivot cover needs omega")]
        cfg = self.config
        report = cartier_cover_report(cfg.r, cfg.s, cfg.samples, cfg.seed, cfg.bound, jobs=cfg.jobs)
        failed = [p for p in report.pairs if p.status == "fail"]
        if failed:
            first = failed[0]
            return [
                CheckResult(
                    name="cartier",
                    status="fail",
                    detail=f"pair {first.source} -> {first.target} fails",
                    witness=first.witness,
                )
            ]
        if report.inconclusive:
            first = report.inconclusive[0]
            return [
                CheckResult(
                    name="cartier",
                    status="inconclusive",
                    detail=f"no overlap sample for {first.source} -> {first.target}",
                )
            ]
        return [_pass("cartier", f"{len(report.pairs)} ordered pivot pairs glue by units")]

    def check_weights(self) -> list[CheckResult]:
        return check_weights(self.config.r, self.config.s)

    def check_limit(self) -> list[CheckResult]:
        if self.omega_less:
            return [_skip("limit", "the degeneration moves omega to 0")]
        return check_limit(self.config.r, self.config.s)

    def run(self, suite: str = "all") -> VerifyReport:
        if suite != "all" and suite not in SUITES:
            raise VerificationError(f"unknown suite {suite!r}")
        names = SUITES if suite == "all" else (suite,)
        checks: list[CheckResult] = []
        for name in names:
            logger.info(f"running {name} checks")
            try:
                checks += getattr(self, f"check_{name}")()
            except CramerError as e:
                checks.append(_fail(name, f"{type(e).__name__}: {e}"))
        cfg = self.config
        return VerifyReport(
            suite=suite,
            r=cfg.r,
            s=cfg.s,
            omega_mode=cfg.omega_mode,
            seed=cfg.seed,
            samples=cfg.samples,
            checks=checks,
        )


def run_ogr(config: RunConfig) -> OgrReport:
    """Generate both quadric families and compare them under a coordinate map."""
    cramer_qs = cramer_242_quadrics()
    spinor_qs = ogr_quadrics()
    search = None
    if config.search:
        coordmap, search = search_identification(config.seed, config.budget)
        source = "search" if coordmap is not None else "none"
    else:
        coordmap, source = load_coordmap(), "committed"

    identical = membership = None
    if coordmap is not None:
        identical = verify_identification(coordmap)
        membership = cross_membership(coordmap, config.samples, config.seed, config.bound)
    return OgrReport(
        cramer_terms=[len(q) for q in cramer_qs],
        spinor_terms=[len(q) for q in spinor_qs],
        spinor_convention=choose_convention(),
        cramer_span_rank=quadric_span(cramer_qs).rank,
        spinor_span_rank=quadric_span(spinor_qs).rank,
        map_source=source,
        identical_spans=identical,
        cross_membership=membership,
        search=search,
    )
