"""The published verify-report schema and a validator for it."""

import json
from functools import lru_cache
from importlib import resources
from typing import Any

SCHEMA_RESOURCE = "verify-report.schema.json"


@lru_cache(maxsize=1)
def schema_text() -> str:
    return resources.files("cramer.schemas").joinpath(SCHEMA_RESOURCE).read_text()


def load_schema() -> dict[str, Any]:
    return json.loads(schema_text())


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def validate_report_schema(data: Any) -> list[str]:
    """Validate a verify report against the published schema and return a list of errors."""
    schema = load_schema()
    props = schema["properties"]
    errors = []

    if not isinstance(data, dict):
        return ["report must be a JSON object"]

    for field in schema["required"]:
        if field not in data:
            errors.append(f"Missing required field: '{field}'")
    for field in data:
        if field not in props:
            errors.append(f"Unexpected field: '{field}'")

    if "suite" in data and data["suite"] not in props["suite"]["enum"]:
        errors.append(f"Unknown suite: {data['suite']!r}")
    if "omega_mode" in data and data["omega_mode"] not in props["omega_mode"]["enum"]:
        errors.append(f"Unknown omega_mode: {data['omega_mode']!r}")
    for field in ("r", "s", "seed", "samples"):
        if field not in data:
            continue
        if not _is_int(data[field]):
            errors.append(f"'{field}' must be an integer")
        elif data[field] < props[field].get("minimum", data[field]):
            errors.append(f"'{field}' must be >= {props[field]['minimum']}")

    if "checks" in data:
        if not isinstance(data["checks"], list):
            errors.append("'checks' must be a list")
        else:
            for k, check in enumerate(data["checks"]):
                errors += _validate_check(k, check, props["checks"]["items"])
    return errors


def _validate_check(k: int, check: Any, schema: dict[str, Any]) -> list[str]:
    if not isinstance(check, dict):
        return [f"checks[{k}] must be an object"]
    errors = []
    props = schema["properties"]
    for field in schema["required"]:
        if field not in check:
            errors.append(f"checks[{k}] is missing '{field}'")
    for field in check:
        if field not in props:
            errors.append(f"checks[{k}] has unexpected field '{field}'")
    if "name" in check and not isinstance(check["name"], str):
        errors.append(f"checks[{k}].name must be a string")
    if "status" in check and check["status"] not in props["status"]["enum"]:
        errors.append(f"checks[{k}].status {check['status']!r} is not a known status")
    if "detail" in check and not isinstance(check["detail"], str):
        errors.append(f"checks[{k}].detail must be a string")
    if check.get("witness") is not None and not isinstance(check["witness"], dict):
        errors.append(f"checks[{k}].witness must be an object or null")
    return errors
