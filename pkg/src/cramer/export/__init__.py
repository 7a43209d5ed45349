"""Ideal export formats."""

from cramer.export.formats import (
    FORMATS,
    ExportFormat,
    render,
    to_export,
    to_json,
    to_m2,
    to_singular,
    write_ideal,
)

__all__ = [
    "FORMATS",
    "ExportFormat",
    "render",
    "to_export",
    "to_json",
    "to_m2",
    "to_singular",
    "write_ideal",
]
