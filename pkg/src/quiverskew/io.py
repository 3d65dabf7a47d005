"""JSON document formats for quivers, groups, cocycles, and actions.

Weights travel as strings "p/q" (or integer strings) so the JSON layer
never touches floating point.  Emitted documents re-parse to equal values;
on canonical documents (sorted ids, reduced fractions) parse . emit is the
identity byte-for-byte.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .quiver import Edge, FiniteQuiver
from .group import FiniteGroup, make_cyclic, make_symmetric, validate_group, QuiverAction
from .skew import Cocycle


class ParseError(ValueError):
    pass


_FRACTION_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_fraction(s):
    if not isinstance(s, str) or not _FRACTION_RE.match(s):
        raise ParseError(f"weight must be a string like '3' or '5/7', got {s!r}")
    return Fraction(s)


def fraction_str(f):
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _require(obj, key, typ, what):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{what}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, typ):
        raise ParseError(f"{what}: field {key!r} has wrong type")
    return val


def parse_quiver_document(obj):
    vertices = _require(obj, "vertices", list, "quiver document")
    raw_edges = _require(obj, "edges", list, "quiver document")
    if not all(isinstance(v, str) for v in vertices):
        raise ParseError("quiver document: vertices must be strings")
    edges = []
    for rec in raw_edges:
        eid = _require(rec, "id", str, "edge record")
        src = _require(rec, "src", str, "edge record")
        rng = _require(rec, "rng", str, "edge record")
        weight = parse_fraction(_require(rec, "weight", str, "edge record"))
        edges.append(Edge(eid, src, rng, weight))
    return FiniteQuiver(vertices, edges)


def emit_quiver_document(q):
    return {
        "vertices": list(q.vertices),
        "edges": [
            {"id": e.id, "src": e.src, "rng": e.rng, "weight": fraction_str(e.weight)}
            for e in q.edges
        ],
    }


def parse_group_document(obj):
    kind = _require(obj, "kind", str, "group document")
    if kind == "cyclic":
        return make_cyclic(_require(obj, "n", int, "group document"))
    if kind == "symmetric":
        return make_symmetric(_require(obj, "n", int, "group document"))
    if kind == "table":
        elements = _require(obj, "elements", list, "group document")
        identity = _require(obj, "identity", str, "group document")
        rows = _require(obj, "table", list, "group document")
        if len(rows) != len(elements) or any(len(r) != len(elements) for r in rows):
            raise ParseError("group document: table shape must be n x n")
        table = {
            g: {h: rows[i][j] for j, h in enumerate(elements)}
            for i, g in enumerate(elements)
        }
        group = FiniteGroup(elements, table, identity)
        bad = validate_group(group)
        if bad:
            raise ParseError(f"group document: {bad[0]}")
        return group
    raise ParseError(f"group document: unknown kind {kind!r}")


def parse_cocycle_document(obj, q):
    group = parse_group_document(_require(obj, "group", dict, "cocycle document"))
    mapping = _require(obj, "map", dict, "cocycle document")
    els = set(group.elements)
    for eid, g in mapping.items():
        if g not in els:
            raise ParseError(f"cocycle document: {g!r} is not a group element")
    for e in q.edges:
        if e.id not in mapping:
            raise ParseError(f"cocycle document: no value for edge {e.id!r}")
    return Cocycle(group, dict(mapping))


def parse_action_document(obj, q):
    group = parse_group_document(_require(obj, "group", dict, "action document"))
    vperm = _require(obj, "vperm", dict, "action document")
    eperm = _require(obj, "eperm", dict, "action document")
    for g in group.elements:
        if g not in vperm or g not in eperm:
            raise ParseError(f"action document: missing permutations for {g!r}")
    return QuiverAction(
        group,
        {g: dict(vperm[g]) for g in group.elements},
        {g: dict(eperm[g]) for g in group.elements},
    )


def dumps(obj):
    """Deterministic JSON encoding used for every emitted document."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def export_dot(q):
    """Graphviz digraph with edge labels 'id:weight'."""
    lines = ["digraph quiver {"]
    for v in q.vertices:
        lines.append(f'  "{v}";')
    for e in q.edges:
        lines.append(
            f'  "{e.src}" -> "{e.rng}" [label="{e.id}:{fraction_str(e.weight)}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
