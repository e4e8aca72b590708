from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any

from jsonschema import validate
from jsonschema.exceptions import ValidationError as _SchemaValidationError

from nokwidth import config
from nokwidth.errors import InternalInvariantError
from nokwidth.rootsys import RootVec, Weight

COMMANDS = ("roots", "width", "essential", "gamma", "verify")

REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "schema_version": {"const": config.SCHEMA_VERSION},
        "command": {"enum": list(COMMANDS)},
        "input": {"type": "object"},
        "output": {"type": "object"},
        "error": {
            "type": "object",
            "properties": {
                "type": {"type": "string"},
                "message": {"type": "string"},
                "exit_code": {"type": "integer"},
            },
            "required": ["type", "message", "exit_code"],
        },
        "timing": {
            "type": "object",
            "properties": {"seconds": {"type": "number", "minimum": 0}},
            "required": ["seconds"],
        },
    },
    "required": ["schema_version", "command", "input"],
    "oneOf": [{"required": ["output"]}, {"required": ["error"]}],
    "additionalProperties": False,
}


class DocumentValidationError(InternalInvariantError):
    pass


def create_report_document(command: str, inputs: dict) -> dict:
    """Base document for one CLI command; ``output`` or ``error`` is filled in later."""
    return {
        "schema_version": config.SCHEMA_VERSION,
        "command": command,
        "input": to_jsonable(inputs),
    }


def format_rational(x: Fraction | int) -> int | str:
    """Integers stay JSON integers, other rationals become "p/q"."""
    f = Fraction(x)
    if f.denominator == 1:
        return int(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return format_rational(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, (RootVec, Weight)):
        return list(obj.coords)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"Cannot serialize {type(obj).__name__}")


def dumps_canonical(document: dict, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def write_document(document: dict, output_path: str, pretty: bool = False) -> None:
    """Write a report document to disk, creating parent directories if needed."""
    os.makedirs(os.path.dirname(output_path) or ".", exist_ok=True)
    with open(output_path, "w", encoding="utf-8") as f:
        f.write(dumps_canonical(document, pretty=pretty))
        f.write("\n")


def validate_document(document: dict) -> None:
    try:
        validate(instance=document, schema=REPORT_SCHEMA)
    except _SchemaValidationError as e:
        raise DocumentValidationError(f"Report schema validation failed: {e.message}") from e
