"""JSON documents for root data and real forms.

One schema serves input and output::

    {"rank": 2, "gamma": [[1, 0], [0, -1]], "coroots": [[1, 1], ...],
     "roots": [[1, 1], ...], "simple_indices": [0, 1], "name": "SO(1,3)"}

Matrices are lists of rows; ``gamma`` may be omitted when only a datum is
needed.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .errors import SchemaError
from .real_form import RealFormSpec
from .root_datum import RootDatum, validate
from .zlattice import IntMatrix

_int_rows = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "rank": {"type": "integer", "minimum": 0},
        "gamma": _int_rows,
        "coroots": _int_rows,
        "roots": _int_rows,
        "simple_indices": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "name": {"type": ["string", "null"]},
    },
    "required": ["rank", "coroots", "roots", "simple_indices"],
    "additionalProperties": False,
}


def to_document(d: RootDatum, f: RealFormSpec | None = None, name: str | None = None) -> dict:
    doc = {
        "rank": d.rank,
        "coroots": [list(c) for c in d.coroots],
        "roots": [list(a) for a in d.roots],
        "simple_indices": list(d.simple_indices),
    }
    if f is not None:
        doc["gamma"] = f.theta.tolist()
    label = name or (f.name if f is not None else None) or d.name
    if label is not None:
        doc["name"] = label
    return doc


def from_document(doc: dict) -> tuple[RootDatum, RealFormSpec | None]:
    """Schema-check ``doc``, then build and validate the datum."""
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"invalid group document: {exc.message}") from exc
    n = doc["rank"]
    d = validate(RootDatum(n, tuple(map(tuple, doc["coroots"])), tuple(map(tuple, doc["roots"])),
                           tuple(doc["simple_indices"]), doc.get("name")))
    f = None
    if "gamma" in doc:
        g = doc["gamma"]
        if len(g) != n or any(len(r) != n for r in g):
            raise SchemaError(f"gamma must be a {n} x {n} matrix")
        f = RealFormSpec(IntMatrix(g, n, n), doc.get("name"))
    return d, f


def load(path: str | Path) -> tuple[RootDatum, RealFormSpec | None]:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
    return from_document(doc)
