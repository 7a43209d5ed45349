"""Verification suites and the report schema."""

from cramer.verify.schema import load_schema, schema_text, validate_report_schema
from cramer.verify.suites import SUITES, VerificationRunner, run_ogr

__all__ = [
    "SUITES",
    "VerificationRunner",
    "load_schema",
    "run_ogr",
    "schema_text",
    "validate_report_schema",
]
