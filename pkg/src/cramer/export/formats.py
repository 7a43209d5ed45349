"""Writers for generated ideals: JSON, Macaulay2 and Singular."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Literal

from cramer.errors import ConfigurationError
from cramer.types import ExportGenerator, ExportTerm, IdealExport
from cramer.variety.ideal import CramerIdeal

logger = logging.getLogger(__name__)

ExportFormat = Literal["json", "m2", "singular"]
FORMATS: tuple[ExportFormat, ...] = ("json", "m2", "singular")


def to_export(ideal: CramerIdeal) -> IdealExport:
    return IdealExport(
        r=ideal.r,
        s=ideal.s,
        omega_mode=ideal.omega_mode,
        variables=ideal.table.names,
        generators=[
            ExportGenerator(
                label=str(g.label),
                terms=[ExportTerm(**term) for term in g.poly.to_terms()],
            )
            for g in ideal.generators
        ],
    )


def to_json(ideal: CramerIdeal) -> str:
    return to_export(ideal).model_dump_json(indent=2) + "\n"


def _generator_lines(ideal: CramerIdeal) -> str:
    return ",\n".join(f"  {g.poly}" for g in ideal.generators)


def to_m2(ideal: CramerIdeal) -> str:
    """Macaulay2: ``R = QQ[...]; I = ideal(...);``"""
    variables = ", ".join(ideal.table.names)
    return (
        f"-- Cr({ideal.r},{ideal.t},{ideal.s}) {ideal.omega_mode.value}\n"
        f"R = QQ[{variables}];\n"
        f"I = ideal(\n{_generator_lines(ideal)}\n);\n"
    )


def to_singular(ideal: CramerIdeal) -> str:
    variables = ", ".join(ideal.table.names)
    return (
        f"// Cr({ideal.r},{ideal.t},{ideal.s}) {ideal.omega_mode.value}\n"
        f"ring R = 0, ({variables}), dp;\n"
        f"ideal I =\n{_generator_lines(ideal)};\n"
    )


def render(ideal: CramerIdeal, fmt: ExportFormat = "json") -> str:
    match fmt:
        case "json":
            return to_json(ideal)
        case "m2":
            return to_m2(ideal)
        case "singular":
            return to_singular(ideal)
    raise ConfigurationError(f"unknown export format {fmt!r}; use one of {', '.join(FORMATS)}")


def write_ideal(ideal: CramerIdeal, path: Path, fmt: ExportFormat = "json") -> Path:
    """Write the rendered ideal, creating parent directories."""
    text = render(ideal, fmt)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as e:
        raise ConfigurationError(f"cannot write {path}: {e}") from e
    logger.info(f"wrote {len(ideal)} generators to {path}")
    return path
