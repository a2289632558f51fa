"""
JSON input documents and canonical serialization.

Four kinds of document are understood::

    complex       {"vertices": [int], "facets": [[int]]}
    graph         {"vertices": [int], "edges": [[int, int]]}
    arrangement   {"matrix": [["p/q", ...], ...]}  or  {"graph": {...}}
    presentation  {"generators": int, "relators": [[signed int]]}

Every document may also carry ``kind``, ``name`` and ``field``.  Unknown keys
are rejected.  Exact values are written as strings so they survive a text
round trip.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

import jsonschema

from .arrangements import Arrangement
from .errors import JumpLociError
from .fox import GroupPresentation
from .simplicial import Graph, SimplicialComplex

_INT_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_RATIONAL = {"anyOf": [{"type": "integer"},
                       {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*-?\d+)?\s*$"}]}
_COMMON = {"kind": {"type": "string"}, "name": {"type": "string"},
           "field": {"type": "string"}}
_GRAPH = {
    "type": "object",
    "properties": {**_COMMON, "vertices": _INT_LIST,
                   "edges": {"type": "array",
                             "items": {"type": "array", "items": {"type": "integer", "minimum": 0},
                                       "minItems": 2, "maxItems": 2}}},
    "required": ["vertices", "edges"],
    "additionalProperties": False,
}
SCHEMAS = {
    "complex": {
        "type": "object",
        "properties": {**_COMMON, "vertices": _INT_LIST,
                       "facets": {"type": "array", "items": _INT_LIST}},
        "required": ["vertices", "facets"],
        "additionalProperties": False,
    },
    "graph": _GRAPH,
    "arrangement": {
        "type": "object",
        "properties": {**_COMMON,
                       "matrix": {"type": "array", "minItems": 1,
                                  "items": {"type": "array", "minItems": 1, "items": _RATIONAL}},
                       "constants": {"type": "array", "items": _RATIONAL},
                       "graph": {"type": "object",
                                 "properties": {"vertices": _INT_LIST,
                                                "edges": _GRAPH["properties"]["edges"]},
                                 "required": ["vertices", "edges"],
                                 "additionalProperties": False}},
        "oneOf": [{"required": ["matrix"]}, {"required": ["graph"]}],
        "additionalProperties": False,
    },
    "presentation": {
        "type": "object",
        "properties": {**_COMMON, "generators": {"type": "integer", "minimum": 0},
                       "relators": {"type": "array",
                                    "items": {"type": "array",
                                              "items": {"type": "integer", "not": {"const": 0}}}}},
        "required": ["generators", "relators"],
        "additionalProperties": False,
    },
}


class InputError(JumpLociError):
    """Malformed or schema-violating input document."""


@dataclass
class InputDocument:
    kind: str
    obj: Any
    field: Optional[str] = None
    name: Optional[str] = None
    ambient: Optional[tuple] = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.name is not None:
            out["name"] = self.name
        if self.field is not None:
            out["field"] = self.field
        out.update(payload_json(self.kind, self.obj, self.ambient))
        return out


def infer_kind(data: dict) -> str:
    if "kind" in data:
        return data["kind"]
    if "facets" in data:
        return "complex"
    if "edges" in data:
        return "graph"
    if "matrix" in data or "graph" in data:
        return "arrangement"
    if "generators" in data:
        return "presentation"
    raise InputError("cannot tell the document kind; add a 'kind' key")


def _err_location(e: jsonschema.ValidationError) -> str:
    path = "/".join(str(p) for p in e.absolute_path)
    return f"at '{path or '<root>'}': {e.message}"


def parse_data(data: Any, source: str = "<input>") -> InputDocument:
    if not isinstance(data, dict):
        raise InputError(f"{source}: top level must be a JSON object")
    kind = infer_kind(data)
    if kind not in SCHEMAS:
        raise InputError(f"{source}: unknown kind {kind!r}")
    errors = sorted(jsonschema.Draft7Validator(SCHEMAS[kind]).iter_errors(data),
                    key=lambda e: list(e.absolute_path))
    if errors:
        raise InputError(f"{source}: " + "; ".join(_err_location(e) for e in errors))
    name, field = data.get("name"), data.get("field")
    if kind == "complex":
        L = SimplicialComplex(data["facets"])
        ambient = tuple(sorted(set(data["vertices"])))
        if not set(L.vertices) <= set(ambient):
            raise InputError(f"{source}: at 'facets': facet vertices missing from 'vertices'")
        return InputDocument(kind, L, field, name, ambient)
    if kind == "graph":
        return InputDocument(kind, Graph(data["vertices"], data["edges"]), field, name)
    if kind == "arrangement":
        if "graph" in data:
            g = data["graph"]
            A = Arrangement.graphic(g["vertices"], [tuple(e) for e in g["edges"]])
        else:
            A = Arrangement([[str(x) for x in r] for r in data["matrix"]], data.get("constants"))
        return InputDocument(kind, A, field, name)
    return InputDocument(kind, GroupPresentation(data["generators"], data["relators"]), field, name)


def parse_text(text: str, source: str = "<input>") -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}: line {e.lineno} column {e.colno}: {e.msg}") from None
    return parse_data(data, source)


def load(path) -> InputDocument:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    return parse_text(text, str(path))


def rational_str(x) -> str:
    return str(Fraction(x))


def payload_json(kind: str, obj, ambient=None) -> dict:
    if kind == "complex":
        verts = list(ambient) if ambient is not None else list(obj.vertices)
        return {"vertices": verts, "facets": [list(f) for f in obj.facets]}
    if kind == "graph":
        return {"vertices": list(obj.vertices), "edges": [list(e) for e in obj.edges]}
    if kind == "arrangement":
        src = obj.source_graph
        if src is not None:
            return {"graph": {"vertices": list(src[0]), "edges": [list(e) for e in src[1]]}}
        out = {"matrix": [[rational_str(x) for x in r] for r in obj.matrix]}
        if obj.constants is not None:
            out["constants"] = [rational_str(c) for c in obj.constants]
        return out
    if kind == "presentation":
        return {"generators": obj.generators, "relators": [list(r) for r in obj.relators]}
    raise InputError(f"unknown kind {kind!r}")


def complex_json(L: SimplicialComplex, ambient=None) -> dict:
    return {"kind": "complex", **payload_json("complex", L, ambient)}


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj) -> str:
    return hashlib.sha256(dumps_canonical(obj).encode()).hexdigest()


def parse_vector(text: str) -> list[str]:
    """``"1,-1/2,0"`` -> ``["1", "-1/2", "0"]`` (validated as rationals)."""
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    for p in parts:
        try:
            Fraction(p)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"{p!r} is not a rational number") from None
    return parts
