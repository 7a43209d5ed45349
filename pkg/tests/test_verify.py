"""Tests for the verification suites and the OGr report."""

import pytest

from cramer.charts import ChartAtlas
from cramer.config import RunConfig
from cramer.errors import VerificationError
from cramer.exact import RatMatrix
from cramer.group import orbit_sample
from cramer.types import CheckResult, OmegaMode
from cramer.variety import ConfigurationPoint, generate_ideal
from cramer.verify import SUITES, VerificationRunner, run_ogr, suites
from cramer.verify.suites import (
    check_charts,
    check_generator_count,
    check_open_orbit,
    check_weights,
)


def statuses(report) -> dict[str, str]:
    return {c.name: c.status for c in report.checks}


class TestVerificationRunner:
    def test_all_suites_small(self):
        report = VerificationRunner(RunConfig(r=1, s=1, samples=5)).run()
        assert report.suite == "all"
        assert report.passed
        names = statuses(report)
        assert names["generator_count"] == "pass"
        assert names["orbit_vanishing"] == "pass"
        assert names["codimension"] == "pass"
        assert names["limit_stratum"] == "pass"

    def test_single_suite(self):
        report = VerificationRunner(RunConfig(r=1, s=2, samples=4)).run("weights")
        assert set(statuses(report)) == {"weight_product", "square_blocks", "sigma_weight"}
        assert report.passed

    def test_report_carries_config(self):
        config = RunConfig(r=1, s=1, seed=7, samples=3)
        report = VerificationRunner(config).run("orbit")
        assert (report.r, report.s, report.seed, report.samples) == (1, 1, 7, 3)
        assert report.omega_mode is OmegaMode.WITH_OMEGA

    def test_omega_less_skips(self):
        config = RunConfig(r=1, s=1, omega_mode="omega-less", samples=3)
        runner = VerificationRunner(config)
        assert statuses(runner.run("cartier")) == {"cartier": "skipped"}
        assert statuses(runner.run("limit")) == {"limit": "skipped"}
        assert statuses(runner.run("charts")) == {"charts": "skipped"}
        assert runner.run("codim").passed

    def test_unknown_suite(self):
        with pytest.raises(VerificationError, match="unknown suite"):
            VerificationRunner(RunConfig(r=1, s=1)).run("everything")

    def test_suites(self):
        assert SUITES == ("orbit", "codim", "charts", "cartier", "weights", "limit")


class TestChecks:
    def test_generator_count(self):
        result = check_generator_count(generate_ideal(2, 3))
        assert isinstance(result, CheckResult)
        assert result.status == "pass"

    def test_open_orbit_fails_off_orbit(self):
        ideal = generate_ideal(1, 1)
        zero = ConfigurationPoint(RatMatrix.zeros(1, 2), RatMatrix.zeros(2, 1), 0)
        result = check_open_orbit(ideal, [zero])
        assert result.failed
        assert result.witness is not None

    def test_weights_pass(self):
        assert all(c.status == "pass" for c in check_weights(2, 3))

    def test_charts_parallel_matches_serial(self):
        atlas = ChartAtlas(1, 2)
        points = orbit_sample(1, 2, seed=5, count=4)
        serial = check_charts(atlas.charts(), points)
        assert [c.status for c in serial] == ["pass", "pass", "pass"]
        assert check_charts(atlas.charts(), points, jobs=2) == serial

    def test_charts_report_first_bad_transition(self, monkeypatch):
        atlas = ChartAtlas(1, 1)
        points = orbit_sample(1, 1, seed=5, count=3)
        real = suites.transition_jacobian_det
        monkeypatch.setattr(
            suites,
            "transition_jacobian_det",
            lambda source, target, p, check=True: 2 * real(source, target, p, check=check),
        )
        transition, sigma, _ = check_charts(atlas.charts(), points)
        assert transition.failed
        assert transition.detail.startswith("det J(M_1 -> M_2)")
        assert sigma.failed


class TestOgrReport:
    def test_committed_map(self):
        report = run_ogr(RunConfig(samples=5))
        assert report.map_source == "committed"
        assert report.cramer_terms == [4] * 10
        assert report.spinor_terms == [4] * 10
        assert report.cramer_span_rank == report.spinor_span_rank == 10
        assert report.identical_spans is True
        assert report.cross_membership.status == "pass"
        assert report.passed

    def test_search_without_budget(self):
        report = run_ogr(RunConfig(samples=5, search=True, budget=0))
        assert report.map_source == "none"
        assert report.identical_spans is None
        assert report.search is not None
        assert not report.search.found
        assert report.passed
