"""Configuration files and single-configuration analysis reports.

Text form, one entry per line, ``#`` starts a comment::

    field: gf:7
    u: (1, 0, 3)
    v: (0, 1, 1)
    ...

The structured alternative is a JSON object with the same keys, vectors
given either as ``"(a, b, c)"`` strings or as three-element lists.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError, ZeroVector
from .fields import Field, parse_field
from .identities import (
    LABELS,
    Configuration,
    check_desargues,
    check_pappus,
    derive_points,
    eval_D,
    eval_P,
    four_triples,
    pairwise_joins,
)
from .projective import point_from
from .vec3 import Vec3, parse_vec


def _build(field: Field, raw: dict[str, Any]) -> Configuration:
    missing = [l for l in LABELS if l not in raw]
    if missing:
        raise ParseError(f"missing vectors: {', '.join(missing)}")
    vecs = {}
    for label in LABELS:
        value = raw[label]
        if isinstance(value, str):
            vecs[label] = parse_vec(value, field)
        elif isinstance(value, list) and len(value) == 3:
            vecs[label] = Vec3(*(field.parse(str(c)) for c in value))
        else:
            raise ParseError(f"bad vector for {label}: {value!r}")
    return Configuration(**vecs)


def parse_config_text(text: str) -> tuple[Field, Configuration]:
    entries: dict[str, str] = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or not value.strip():
            raise ParseError(f"line {n}: expected 'key: value'")
        if key in entries:
            raise ParseError(f"line {n}: duplicate key {key!r}")
        if key != "field" and key not in LABELS:
            raise ParseError(f"line {n}: unknown key {key!r}")
        entries[key] = value.strip()
    if "field" not in entries:
        raise ParseError("missing 'field:' line")
    field = parse_field(entries.pop("field"))
    return field, _build(field, entries)


def parse_config_json(text: str) -> tuple[Field, Configuration]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(data, dict) or "field" not in data:
        raise ParseError("expected a JSON object with a 'field' key")
    field = parse_field(str(data["field"]))
    return field, _build(field, data)


def format_config(field: Field, c: Configuration) -> str:
    lines = [f"field: {field.name}"]
    lines += [f"{label}: {vec}" for label, vec in c.items()]
    return "\n".join(lines) + "\n"


def _point_or_none(v: Vec3):
    try:
        return str(point_from(v))
    except ZeroVector:
        return None


def analyze(field: Field, c: Configuration) -> dict[str, Any]:
    """Everything the ``check`` command reports, as plain JSON-ready data."""
    d = derive_points(c)
    P, D = eval_P(c), eval_D(c)
    pap, des = check_pappus(c), check_desargues(c)
    triples = four_triples(c)
    equal = all(t == triples[0] for t in triples)
    return {
        "field": field.name,
        "configuration": {label: str(v) for label, v in c.items()},
        "joins": {k: str(v) for k, v in pairwise_joins(c).items()},
        "derived_points": {
            name: {"coordinates": str(v), "point": _point_or_none(v)} for name, v in d.items()
        },
        "formula_P": {"lhs": str(P.lhs), "rhs": str(P.rhs), "holds": P.holds},
        "formula_D": {"lhs": str(D.lhs), "rhs": str(D.rhs), "holds": D.holds},
        "pappus": {
            "hypothesis_holds": pap.hypothesis_holds,
            "conclusion_holds": pap.conclusion_holds,
            "degenerate": pap.degenerate,
        },
        "desargues": {
            "triangles_ok": des.triangles_ok,
            "concurrent_1st": des.concurrent_1st,
            "collinear_2nd": des.collinear_2nd,
            "degenerate": des.degenerate,
        },
        "four_triples": {"determinants": [str(t) for t in triples], "equal": equal},
        "ok": P.holds and D.holds and pap.consistent and des.consistent and equal,
    }


def render_text(report: dict[str, Any]) -> str:
    out = [f"field: {report['field']}", "", "configuration:"]
    out += [f"  {k}: {v}" for k, v in report["configuration"].items()]
    out += ["", "fifteen joins:"]
    out += [f"  {k}: {v}" for k, v in report["joins"].items()]
    out += ["", "derived points:"]
    for k, v in report["derived_points"].items():
        shown = v["point"] or "undefined (zero vector)"
        out.append(f"  {k}: {v['coordinates']}  -> {shown}")
    for name in ("formula_P", "formula_D"):
        r = report[name]
        out += ["", f"{name}: {'holds' if r['holds'] else 'FAILS'}", f"  lhs = {r['lhs']}", f"  rhs = {r['rhs']}"]
    pap, des = report["pappus"], report["desargues"]
    out += ["", "pappus:"]
    out.append(f"  U,V,W and X,Y,Z collinear: {pap['hypothesis_holds']}")
    out.append(f"  O,P,Q collinear: {pap['conclusion_holds']}")
    if pap["degenerate"]:
        out.append("  (degenerate: some of O,P,Q undefined)")
    out += ["", "desargues:"]
    out.append(f"  triangles UVW, XYZ non-degenerate: {des['triangles_ok']}")
    out.append(f"  U+X, V+Y, W+Z concurrent: {des['concurrent_1st']}")
    out.append(f"  R,S,T collinear: {des['collinear_2nd']}")
    if des["degenerate"]:
        out.append("  (degenerate: some line or derived point undefined)")
    ft = report["four_triples"]
    out += ["", f"four triples: {', '.join(ft['determinants'])}  equal: {ft['equal']}"]
    out += ["", "all checks passed" if report["ok"] else "CHECK FAILED"]
    return "\n".join(out) + "\n"
