"""Output records and their delimited/JSON serializations.

CSV emission is canonical and byte-stable: a single header row, comma
delimiter, "\n" line endings, shortest round-trip decimals for floats,
``true``/``false`` for booleans and empty fields for missing values.
Fields never contain commas, quotes or newlines, so no quoting is
applied and re-emitting a parsed document reproduces it byte for byte.
Trailing ``# meta`` comment lines carry run metadata.

JSON output is one record object per line, validating against the schema
shipped in ``schemas/output_record.schema.json``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Sequence, Tuple

__all__ = [
    "OutputRecord",
    "canonical",
    "render_csv",
    "parse_csv",
    "json_line",
    "load_schema",
]

_FORBIDDEN = (",", "\n", "\r", '"')


@dataclass(frozen=True)
class OutputRecord:
    """One emitted result: command, inputs, outputs and run metadata."""

    command: str
    inputs: Dict[str, object] = field(default_factory=dict)
    outputs: Dict[str, object] = field(default_factory=dict)
    meta: Dict[str, object] = field(default_factory=dict)


def canonical(value: object) -> str:
    """Canonical field text: shortest round-trip decimals, lowercase booleans."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    text = str(value)
    if any(ch in text for ch in _FORBIDDEN):
        raise ValueError(f"field value {text!r} is not CSV-safe")
    return text


def render_csv(header: Sequence[str], rows: Sequence[Sequence[object]],
               comments: Sequence[str] = ()) -> str:
    """Render header + rows + trailing '# ' comment lines."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(canonical(v) for v in row))
    for comment in comments:
        lines.append(f"# {comment}")
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> Tuple[List[str], List[List[str]], List[str]]:
    """Inverse of render_csv; returns (header, rows, comments)."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    header: List[str] = []
    rows: List[List[str]] = []
    comments: List[str] = []
    for i, line in enumerate(lines):
        if line.startswith("# "):
            comments.append(line[2:])
        elif i == 0:
            header = line.split(",")
        else:
            rows.append(line.split(","))
    return header, rows, comments


def json_line(record: OutputRecord) -> str:
    """Serialize one record as a compact JSON object (finite numbers only)."""
    payload = {
        "command": record.command,
        "inputs": record.inputs,
        "outputs": record.outputs,
        "meta": record.meta,
    }
    return json.dumps(payload, allow_nan=False, separators=(",", ":"))


def load_schema() -> dict:
    """The output-record JSON schema shipped with the package."""
    path = resources.files("eupbounds").joinpath("schemas/output_record.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))
