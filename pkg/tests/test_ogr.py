"""Tests for the spinor quadrics and the identification with the omega-less Cr(2,4,2)."""

import json
import random
from fractions import Fraction
from importlib import resources

import pytest
import sympy

from cramer.charts import transition_jacobian_det
from cramer.errors import ConfigurationError, ParameterError, VerificationError
from cramer.group import orbit_sample
from cramer.ogr import (
    CoordMap,
    choose_convention,
    cramer_242_quadrics,
    cross_membership,
    entry_chart,
    entry_charts,
    load_coordmap,
    load_search_log,
    ogr_quadrics,
    parametrization_holds,
    parametrize,
    quadratic_monomials,
    quadric_span,
    replay_search,
    search_identification,
    spinor_table,
    verify_identification,
    write_coordmap,
)
from cramer.ogr.spinor import omitted, pfaffian4, random_skew
from cramer.poly import MultiPoly, VariableTable, m, n
from cramer.types import OmegaMode
from cramer.variety import generate_ideal, jacobian_rank_at


@pytest.fixture(scope="module")
def coordmap():
    return load_coordmap()


class TestSpinorQuadrics:
    def test_shape(self):
        quadrics = ogr_quadrics()
        assert len(quadrics) == 10
        assert len(spinor_table()) == 16
        assert all(len(q) == 4 for q in quadrics)
        assert all(q.is_homogeneous(2) for q in quadrics)

    def test_convention(self):
        assert choose_convention() == "alternating"
        assert parametrization_holds("alternating", seed=3)
        assert not parametrization_holds("all-plus")

    def test_parametrization_at_zero(self):
        xi = random_skew(random.Random(0), 0)
        values = parametrize(xi, choose_convention())
        assert values == (1,) + (0,) * 15
        assert all(q.eval(values) == 0 for q in ogr_quadrics())

    def test_pfaffian_squares_to_determinant(self):
        rng = random.Random(12)
        for _ in range(20):
            xi = random_skew(rng, 5)
            for i in range(5):
                idx = omitted(i)
                pf = pfaffian4(lambda a, b: xi[a, b], idx)
                block = sympy.Matrix([[int(xi[a, b]) for b in idx] for a in idx])
                assert pf * pf == Fraction(str(block.det()))


class TestCramerQuadrics:
    def test_shape(self):
        quadrics = cramer_242_quadrics()
        assert len(quadrics) == 10
        assert all(len(q) == 4 for q in quadrics)

    def test_codimension_on_samples(self):
        ideal = generate_ideal(2, 2, OmegaMode.OMEGA_LESS)
        for p in orbit_sample(2, 2, seed=0, count=20, omega_mode=OmegaMode.OMEGA_LESS):
            assert jacobian_rank_at(ideal, p) == 5


class TestQuadricSpan:
    def test_monomial_count(self):
        assert len(quadratic_monomials(spinor_table())) == 136

    def test_single_quadric(self):
        table = VariableTable.cramer(2, 2, omega=False)
        q = MultiPoly.variable(table, m(0, 0)) * MultiPoly.variable(table, n(0, 0))
        assert quadric_span([q]).rank == 1

    def test_full_rank(self):
        assert quadric_span(cramer_242_quadrics()).rank == 10
        assert quadric_span(ogr_quadrics()).rank == 10

    def test_span_ignores_scaling_and_order(self):
        qs = cramer_242_quadrics()
        shuffled = [q.scale(-2) for q in reversed(qs)]
        assert quadric_span(shuffled) == quadric_span(qs)

    def test_rejects_non_quadratic(self):
        table = VariableTable.cramer(1, 1)
        with pytest.raises(ParameterError, match="not a quadratic form"):
            quadric_span([MultiPoly.variable(table, m(0, 0))])
        with pytest.raises(ParameterError):
            quadric_span([])


class TestCoordMap:
    def test_committed_map_identifies(self, coordmap):
        assert verify_identification(coordmap)

    def test_cross_membership(self, coordmap):
        result = cross_membership(coordmap, samples=15, seed=4)
        assert result.status == "pass"

    def test_wrong_map_fails(self, coordmap):
        data = coordmap.to_dict()
        data["x"]["target"], data["y1"]["target"] = data["y1"]["target"], data["x"]["target"]
        assert not verify_identification(CoordMap.from_dict(data))

    def test_dict_round_trip(self, coordmap):
        assert CoordMap.from_dict(coordmap.to_dict()).to_dict() == coordmap.to_dict()
        assert list(coordmap.to_dict()) == spinor_table().names

    def test_not_a_bijection(self, coordmap):
        data = coordmap.to_dict()
        data["x"]["target"] = data["x12"]["target"]
        with pytest.raises(ConfigurationError, match="each Cramer coordinate once"):
            CoordMap.from_dict(data)

    def test_bad_sign(self, coordmap):
        data = coordmap.to_dict()
        data["y5"]["sign"] = 2
        with pytest.raises(ConfigurationError, match="signs"):
            CoordMap.from_dict(data)

    def test_malformed(self):
        with pytest.raises(ConfigurationError, match="malformed"):
            CoordMap.from_dict({"x": {"sign": 1}})

    def test_load_from_path(self, coordmap, tmp_path):
        path = tmp_path / "map.json"
        path.write_text(json.dumps(coordmap.to_dict()))
        assert load_coordmap(path).to_dict() == coordmap.to_dict()
        with pytest.raises(ConfigurationError, match="not found"):
            load_coordmap(tmp_path / "missing.json")

    def test_pull_back_and_push_forward(self, coordmap):
        values = tuple(Fraction(k) for k in range(16))
        assert coordmap.push_forward(coordmap.pull_back(values)) == values


class TestSearch:
    def test_zero_budget(self):
        found, outcome = search_identification(seed=0, budget=0)
        assert found is None
        assert not outcome.found
        assert outcome.nodes == 0
        assert outcome.log[0].startswith("search seed=0 budget=0")
        assert outcome.log[-1] == "maps found: 0"

    def test_reproducible(self):
        _, first = search_identification(seed=5, budget=300)
        _, second = search_identification(seed=5, budget=300)
        assert first == second
        assert first.nodes <= 300

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_found_maps_verify(self, seed):
        found, outcome = search_identification(seed=seed, budget=2000)
        assert outcome.found
        assert found is not None
        assert outcome.maps
        assert verify_identification(found)
        for data in outcome.maps:
            assert verify_identification(CoordMap.from_dict(data))


class TestSearchLog:
    def test_rerun_matches_written_log(self, tmp_path):
        found, outcome = search_identification(seed=0)
        map_path, log_path = write_coordmap(outcome, tmp_path)
        assert load_coordmap(map_path).to_dict() == found.to_dict()
        recorded = load_search_log(log_path)
        assert recorded == outcome
        assert recorded.log[0].startswith("search seed=0 budget=100000 order=")
        assert recorded.log[-2] == f"search finished after {recorded.nodes} nodes"
        assert recorded.log[-1] == "maps found: 1"
        assert replay_search(recorded) == recorded

    def test_shipped_log_reproduces_shipped_map(self):
        if not resources.files("cramer.ogr.data").joinpath("coordmap.log.json").is_file():
            pytest.skip("no search log shipped beside coordmap.json")
        recorded = load_search_log()
        assert recorded.found
        assert recorded.maps[0] == load_coordmap().to_dict()
        assert replay_search(recorded) == recorded

    def test_nothing_to_write(self, tmp_path):
        _, outcome = search_identification(seed=0, budget=0)
        with pytest.raises(VerificationError, match="found no map"):
            write_coordmap(outcome, tmp_path)
        assert not (tmp_path / "coordmap.json").exists()

    def test_bad_log(self, tmp_path):
        with pytest.raises(ConfigurationError, match="not found"):
            load_search_log(tmp_path / "missing.json")
        path = tmp_path / "coordmap.log.json"
        path.write_text(json.dumps({"found": True}))
        with pytest.raises(ConfigurationError, match="invalid search log"):
            load_search_log(path)


class TestEntryCharts:
    def test_names(self):
        first, second = entry_charts()
        assert (first.name, second.name) == ("U_m11", "U_m21")
        assert first.dimension == second.dimension == 11

    def test_substitution(self):
        for chart in entry_charts():
            assert chart.substitution_holds()

    def test_transition_is_cube_of_pivot_ratio(self):
        first, second = entry_charts()
        points = orbit_sample(2, 2, seed=7, count=15, omega_mode=OmegaMode.OMEGA_LESS)
        checked = 0
        for p in points:
            if p.M[0, 0] == 0 or p.M[1, 0] == 0:
                continue
            ratio = p.M[1, 0] / p.M[0, 0]
            assert transition_jacobian_det(first, second, p) == ratio**3
            assert transition_jacobian_det(second, first, p) == ratio**-3
            checked += 1
        assert checked > 0

    def test_bad_row(self):
        with pytest.raises(ParameterError):
            entry_chart(2)
