"""Tests for the command-line interface."""

import io
import json

import pytest
import yaml
from rich.console import Console
from typer.testing import CliRunner

from cramer import cli
from cramer.cli import app
from cramer.ogr import load_coordmap, load_search_log, replay_search, verify_identification
from cramer.variety import ConfigurationPoint, generate_ideal, on_variety
from cramer.verify import validate_report_schema

runner = CliRunner()


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


class TestInit:
    def test_writes_config(self, workdir):
        result = runner.invoke(app, ["init"])
        assert result.exit_code == 0
        data = yaml.safe_load((workdir / "cramer.yaml").read_text())
        assert data["r"] == 2

    def test_keeps_existing_without_confirmation(self, workdir):
        (workdir / "cramer.yaml").write_text("r: 1\ns: 1\n")
        result = runner.invoke(app, ["init"], input="n\n")
        assert result.exit_code == 0
        assert (workdir / "cramer.yaml").read_text() == "r: 1\ns: 1\n"

    def test_force(self, workdir):
        (workdir / "cramer.yaml").write_text("r: 1\ns: 1\n")
        assert runner.invoke(app, ["init", "--force"]).exit_code == 0
        assert "omega_mode" in (workdir / "cramer.yaml").read_text()


class TestIdeal:
    def test_json_file(self, workdir):
        result = runner.invoke(app, ["ideal", "--r", "1", "--s", "1", "-o", "ideal.json"])
        assert result.exit_code == 0
        data = json.loads((workdir / "ideal.json").read_text())
        assert len(data["generators"]) == 3

    def test_omega_less_m2(self, workdir):
        args = ["ideal", "--omega-less", "--format", "m2", "-o", "cr242.m2"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        text = (workdir / "cr242.m2").read_text()
        assert text.startswith("-- Cr(2,4,2) omega-less")
        assert "omega" not in text.splitlines()[1]

    def test_stdout(self):
        result = runner.invoke(app, ["ideal", "--r", "1", "--s", "1", "--format", "singular"])
        assert result.exit_code == 0
        assert "ring R = 0" in result.output

    def test_reads_config_file(self, workdir):
        (workdir / "cramer.yaml").write_text("r: 1\ns: 2\nformat: json\n")
        result = runner.invoke(app, ["ideal", "-o", "ideal.json"])
        assert result.exit_code == 0
        data = json.loads((workdir / "ideal.json").read_text())
        assert (data["r"], data["s"]) == (1, 2)

    def test_bad_shape(self):
        result = runner.invoke(app, ["ideal", "--r", "3", "--s", "2"])
        assert result.exit_code == 2


class TestVerify:
    def test_report(self, workdir):
        args = ["verify", "orbit", "--r", "1", "--s", "1", "--samples", "3", "-o", "report.json"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        data = json.loads((workdir / "report.json").read_text())
        assert validate_report_schema(data) == []
        assert data["suite"] == "orbit"

    def test_json_to_stdout(self, monkeypatch):
        table = io.StringIO()
        monkeypatch.setattr(cli, "err_console", Console(file=table, width=120))
        result = runner.invoke(app, ["verify", "weights", "--r", "1", "--s", "2", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert validate_report_schema(data) == []
        assert data["suite"] == "weights"
        assert "weight_product" in table.getvalue()
        assert "All checks passed." in table.getvalue()

    def test_unknown_suite(self):
        assert runner.invoke(app, ["verify", "speed"]).exit_code == 2

    def test_bad_config(self, workdir):
        (workdir / "broken.yaml").write_text("samples: 0\n")
        result = runner.invoke(app, ["verify", "--config", "broken.yaml"])
        assert result.exit_code == 2


class TestOgr:
    def test_committed(self, workdir):
        result = runner.invoke(app, ["ogr", "--samples", "3", "-o", "ogr.json"])
        assert result.exit_code == 0
        data = json.loads((workdir / "ogr.json").read_text())
        assert data["map_source"] == "committed"
        assert data["identical_spans"] is True

    def test_save_map(self, workdir):
        args = ["ogr", "--search", "--seed", "0", "--samples", "3", "--save-map", "maps"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        coordmap = load_coordmap(workdir / "maps" / "coordmap.json")
        assert verify_identification(coordmap)
        recorded = load_search_log(workdir / "maps" / "coordmap.log.json")
        assert recorded.found
        assert recorded.maps[0] == coordmap.to_dict()
        assert replay_search(recorded) == recorded

    def test_save_map_needs_search(self, workdir):
        result = runner.invoke(app, ["ogr", "--save-map", "maps"])
        assert result.exit_code == 2
        assert not (workdir / "maps").exists()


class TestSample:
    def test_points_on_variety(self, workdir):
        args = ["sample", "--r", "1", "--s", "2", "--samples", "4", "-o", "points.json"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        data = json.loads((workdir / "points.json").read_text())
        points = [ConfigurationPoint.from_dict(d) for d in data]
        assert len(points) == 4
        ideal = generate_ideal(1, 2)
        assert all(on_variety(ideal, p) for p in points)


class TestSchema:
    def test_prints_schema(self):
        result = runner.invoke(app, ["schema"])
        assert result.exit_code == 0
        assert json.loads(result.output)["title"] == "Cramer verify report"
