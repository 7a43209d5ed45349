"""Configuration models for Cramer runs."""

from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, ValidationError, field_validator

from cramer.errors import ConfigurationError
from cramer.types import OmegaMode

CONFIG_FILE = "cramer.yaml"


class RunConfig(BaseModel):
    """Settings shared by every command.

    Values come from ``cramer.yaml`` when present; command-line flags override them.
    """

    r: int = 2
    s: int = 2
    omega_mode: OmegaMode = OmegaMode.WITH_OMEGA
    seed: int = 0
    samples: int = 20
    bound: int = 5  # entries of random group elements lie in [-bound, bound]
    output: str | None = None
    format: Literal["json", "m2", "singular"] = "json"
    jobs: int = 1
    search: bool = False  # search for a coordinate map instead of loading the committed one
    budget: int = 100_000  # search nodes

    @field_validator("r")
    @classmethod
    def validate_r(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"r must be >= 1, got {v}")
        return v

    @field_validator("samples", "bound", "jobs")
    @classmethod
    def validate_positive(cls, v: int, info) -> int:
        if v < 1:
            raise ValueError(f"{info.field_name} must be >= 1, got {v}")
        return v

    @field_validator("budget")
    @classmethod
    def validate_budget(cls, v: int) -> int:
        if v < 0:
            raise ValueError(f"budget must be >= 0, got {v}")
        return v

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v: int) -> int:
        if not -(2**63) <= v < 2**64:
            raise ValueError("seed must fit in 64 bits")
        return v

    def model_post_init(self, __context):
        if self.s < self.r:
            raise ValueError(f"need r <= s, got r={self.r}, s={self.s}")

    @property
    def t(self) -> int:
        return self.r + self.s


def _read_yaml(path: Path) -> dict[str, Any]:
    try:
        with open(path) as f:
            data = yaml.safe_load(f)
    except FileNotFoundError:
        raise ConfigurationError(f"config file not found: {path}") from None
    except yaml.YAMLError as e:
        raise ConfigurationError(f"invalid YAML in {path}: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path} must contain a mapping")
    return data


def _build(data: dict[str, Any]) -> RunConfig:
    try:
        return RunConfig(**data)
    except (ValidationError, ValueError) as e:
        raise ConfigurationError(str(e)) from e


def load_config(path: Path) -> RunConfig:
    """Load configuration from YAML file."""
    return _build(_read_yaml(Path(path)))


def resolve_config(path: Path | None = None, **overrides: Any) -> RunConfig:
    """File values (if any), then every override that is not None."""
    data = _read_yaml(Path(path)) if path is not None else {}
    data.update({k: v for k, v in overrides.items() if v is not None})
    return _build(data)


def get_config_template() -> str:
    """Get the default configuration template."""
    return """# Cramer Configuration
# Generated by 'cramer init'. Command-line flags override these values.

r: 2  # rows of M, 1 <= r <= s
s: 2  # columns of N
omega_mode: with-omega  # with-omega or omega-less

seed: 0  # every run is reproducible from the seed
samples: 20  # orbit points per check
bound: 5  # random entries lie in [-bound, bound]
jobs: 1  # worker processes for sampling

format: json  # ideal export: json, m2 or singular
# output: cr22.json  # write reports/exports here instead of stdout

search: false  # cramer ogr: search for a coordinate map instead of the committed one
budget: 100000  # search nodes
"""
