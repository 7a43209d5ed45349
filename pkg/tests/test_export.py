"""Tests for ideal export formats."""

import json

import pytest

from cramer.errors import ConfigurationError
from cramer.export import render, to_export, to_json, to_m2, to_singular, write_ideal
from cramer.types import IdealExport, OmegaMode
from cramer.variety import generate_ideal


@pytest.fixture
def small():
    return generate_ideal(1, 1)


class TestJson:
    def test_structure(self, small):
        data = json.loads(to_json(small))
        assert data["r"] == 1
        assert data["s"] == 1
        assert data["omega_mode"] == "with-omega"
        assert data["variables"] == ["m11", "m12", "n11", "n21", "omega"]
        assert [g["label"] for g in data["generators"]] == [
            "Bilinear(1,1)",
            "MinorMatch(1)",
            "MinorMatch(2)",
        ]

    def test_coefficients_are_fractions(self, small):
        export = to_export(small)
        coeffs = {t.coeff for g in export.generators for t in g.terms}
        assert coeffs <= {"1/1", "-1/1"}
        assert all(len(t.exponents) == 5 for g in export.generators for t in g.terms)

    def test_generator_counts(self):
        data = json.loads(to_json(generate_ideal(2, 2, OmegaMode.OMEGA_LESS)))
        assert data["omega_mode"] == "omega-less"
        assert len(data["generators"]) == 10
        assert "omega" not in data["variables"]

    def test_parses_back(self, small):
        export = IdealExport.model_validate_json(to_json(small))
        assert export == to_export(small)

    def test_deterministic(self):
        assert to_json(generate_ideal(2, 3)) == to_json(generate_ideal(2, 3))


class TestComputerAlgebraFormats:
    def test_m2(self, small):
        text = to_m2(small)
        assert text.startswith("-- Cr(1,2,1) with-omega\n")
        assert "R = QQ[m11, m12, n11, n21, omega];" in text
        assert "  m11*n11 + m12*n21,\n" in text
        assert text.endswith(");\n")

    def test_singular(self, small):
        text = to_singular(small)
        assert text.startswith("// Cr(1,2,1) with-omega\n")
        assert "ring R = 0, (m11, m12, n11, n21, omega), dp;" in text
        assert text.endswith(";\n")
        assert text.count(",\n") == 2

    def test_render_dispatch(self, small):
        assert render(small, "m2") == to_m2(small)
        assert render(small, "singular") == to_singular(small)
        assert render(small) == to_json(small)

    def test_unknown_format(self, small):
        with pytest.raises(ConfigurationError, match="unknown export format"):
            render(small, "maple")


class TestWriteIdeal:
    def test_creates_parents(self, small, tmp_path):
        path = write_ideal(small, tmp_path / "out" / "ideal.m2", "m2")
        assert path.exists()
        assert path.read_text() == to_m2(small)
