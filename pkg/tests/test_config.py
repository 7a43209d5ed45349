"""Tests for configuration parsing."""

import tempfile
from pathlib import Path

import pytest
import yaml

from cramer.config import RunConfig, get_config_template, load_config, resolve_config
from cramer.errors import ConfigurationError
from cramer.types import OmegaMode


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig()
        assert (config.r, config.s, config.t) == (2, 2, 4)
        assert config.omega_mode is OmegaMode.WITH_OMEGA
        assert config.seed == 0
        assert config.format == "json"
        assert not config.search

    def test_omega_mode_from_string(self):
        assert RunConfig(omega_mode="omega-less").omega_mode is OmegaMode.OMEGA_LESS

    def test_rejects_bad_r(self):
        with pytest.raises(ValueError, match="r must be >= 1"):
            RunConfig(r=0)

    def test_rejects_r_above_s(self):
        with pytest.raises(ValueError, match="need r <= s"):
            RunConfig(r=3, s=2)

    def test_rejects_non_positive_samples(self):
        with pytest.raises(ValueError, match="samples must be >= 1"):
            RunConfig(samples=0)

    def test_rejects_negative_budget(self):
        with pytest.raises(ValueError, match="budget must be >= 0"):
            RunConfig(budget=-1)

    def test_rejects_unknown_format(self):
        with pytest.raises(ValueError):
            RunConfig(format="maple")


class TestConfigTemplate:
    def test_template_is_valid_yaml(self):
        data = yaml.safe_load(get_config_template())
        assert data["r"] == 2
        assert data["omega_mode"] == "with-omega"
        assert "output" not in data

    def test_template_loads(self):
        with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
            f.write(get_config_template())
            f.flush()
            config = load_config(Path(f.name))
        assert config == RunConfig()


class TestLoadConfig:
    def test_load_values(self, tmp_path):
        path = tmp_path / "cramer.yaml"
        path.write_text("r: 1\ns: 3\nomega_mode: omega-less\nseed: 9\n")
        config = load_config(path)
        assert (config.r, config.s, config.seed) == (1, 3, 9)
        assert config.omega_mode is OmegaMode.OMEGA_LESS

    def test_empty_file(self, tmp_path):
        path = tmp_path / "cramer.yaml"
        path.write_text("")
        assert load_config(path) == RunConfig()

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError, match="not found"):
            load_config(tmp_path / "missing.yaml")

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "cramer.yaml"
        path.write_text("r: [1, 2\n")
        with pytest.raises(ConfigurationError, match="invalid YAML"):
            load_config(path)

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "cramer.yaml"
        path.write_text("- r\n- s\n")
        with pytest.raises(ConfigurationError, match="mapping"):
            load_config(path)

    def test_invalid_values(self, tmp_path):
        path = tmp_path / "cramer.yaml"
        path.write_text("r: 4\ns: 2\n")
        with pytest.raises(ConfigurationError, match="need r <= s"):
            load_config(path)


class TestResolveConfig:
    def test_overrides_win(self, tmp_path):
        path = tmp_path / "cramer.yaml"
        path.write_text("r: 1\ns: 1\nseed: 3\n")
        config = resolve_config(path, seed=11, samples=None)
        assert config.seed == 11
        assert config.samples == 20
        assert config.r == 1

    def test_without_file(self):
        config = resolve_config(None, r=1, s=2)
        assert (config.r, config.s) == (1, 2)
