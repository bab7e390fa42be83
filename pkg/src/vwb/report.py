"""Machine-readable report records shared by the moduli bookkeeping, the
verification runner and the command line.

Rationals travel as ``{"num": "<int>", "den": "<int>"}`` so that arbitrary
precision survives JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

SCHEMA = "vwb/1"
STATUSES = ("pass", "fail", "unknown")

__all__ = ["SCHEMA", "Discrepancy", "Report", "encode", "decode", "REPORT_JSON_SCHEMA"]


def encode(value: Any) -> Any:
    """Convert a value into plain JSON types."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    raise TypeError(f"cannot encode {type(value).__name__}")


def decode(value: Any) -> Any:
    if isinstance(value, dict):
        if set(value) == {"num", "den"}:
            return Fraction(int(value["num"]), int(value["den"]))
        return {k: decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode(v) for v in value]
    return value


@dataclass(frozen=True)
class Discrepancy:
    """A published value that disagrees with an independently derived one.

    ``derived_value`` is ``None`` when the derived side is undetermined.
    """

    location: str
    paper_value: Any
    derived_value: Any

    def to_json(self) -> Dict[str, Any]:
        return {
            "location": self.location,
            "paper_value": encode(self.paper_value),
            "derived_value": encode(self.derived_value),
        }

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "Discrepancy":
        return cls(obj["location"], decode(obj["paper_value"]), decode(obj["derived_value"]))

    def sort_key(self):
        return (self.location, json.dumps(encode(self.paper_value)), json.dumps(encode(self.derived_value)))


@dataclass
class Report:
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    outputs: Dict[str, Any] = field(default_factory=dict)
    discrepancies: List[Discrepancy] = field(default_factory=list)
    status: str = "pass"

    def to_json(self) -> Dict[str, Any]:
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        return {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": encode(self.inputs),
            "outputs": encode(self.outputs),
            "discrepancies": [d.to_json() for d in sorted(self.discrepancies, key=Discrepancy.sort_key)],
            "status": self.status,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "Report":
        if obj.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {obj.get('schema')!r}")
        return cls(
            command=obj["command"],
            inputs=decode(obj["inputs"]),
            outputs=decode(obj["outputs"]),
            discrepancies=[Discrepancy.from_json(d) for d in obj["discrepancies"]],
            status=obj["status"],
        )

    @classmethod
    def loads(cls, text: str) -> "Report":
        return cls.from_json(json.loads(text))


# JSON Schema (draft 2020-12) for the report wire format.
_RATIONAL = {
    "type": "object",
    "properties": {"num": {"type": "string", "pattern": "^-?[0-9]+$"}, "den": {"type": "string", "pattern": "^[1-9][0-9]*$"}},
    "required": ["num", "den"],
    "additionalProperties": False,
}

REPORT_JSON_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA},
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "outputs": {"type": "object"},
        "discrepancies": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "location": {"type": "string"},
                    "paper_value": {},
                    "derived_value": {},
                },
                "required": ["location", "paper_value", "derived_value"],
                "additionalProperties": False,
            },
        },
        "status": {"enum": list(STATUSES)},
    },
    "required": ["schema", "command", "inputs", "outputs", "discrepancies", "status"],
    "additionalProperties": False,
    "$defs": {"rational": _RATIONAL},
}
