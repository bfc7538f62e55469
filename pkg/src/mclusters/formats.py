"""
formats.py

Text file formats for angulations and bound quivers, DOT export, and a
canonical JSON rendering (sorted keys, integers only).
"""

from __future__ import annotations

import json
from typing import Iterable, List

from .angulation import Angulation, validate_angulation
from .errors import ParseError
from .quiver import Arrow, BoundQuiver
from .surface import parse_arc, parse_surface


def _content_lines(text: str) -> Iterable[str]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_angulation(text: str) -> Angulation:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty angulation file")
    s = parse_surface(lines[0])
    return validate_angulation(s, [parse_arc(line) for line in lines[1:]])


def serialize_angulation(a: Angulation) -> str:
    return "\n".join([a.surface.header()] + [arc.text() for arc in a.arcs]) + "\n"


def parse_quiver(text: str) -> BoundQuiver:
    vertices = None
    arrows: List[Arrow] = []
    relations = set()
    for line in _content_lines(text):
        if line.startswith("vertices:"):
            if vertices is not None:
                raise ParseError("vertices declared twice")
            vals = line[len("vertices:"):].split()
            try:
                nums = [int(v) for v in vals]
            except ValueError:
                raise ParseError(f"bad vertices line: {line!r}") from None
            if len(nums) == 1:
                vertices = tuple(range(nums[0]))
            elif nums:
                vertices = tuple(nums)
            else:
                raise ParseError("vertices line lists nothing")
            continue
        tok = line.split()
        try:
            if tok[0] == "arrow" and len(tok) in (4, 5):
                label = tok[4] if len(tok) == 5 else None
                arrows.append(Arrow(int(tok[1]), int(tok[2]), int(tok[3]), label))
                continue
            if tok[0] == "rel" and len(tok) == 3:
                relations.add((int(tok[1]), int(tok[2])))
                continue
        except ValueError:
            pass
        raise ParseError(f"bad quiver line: {line!r}")
    if vertices is None:
        raise ParseError("missing vertices line")
    try:
        return BoundQuiver(vertices, tuple(arrows), frozenset(relations))
    except ValueError as err:
        raise ParseError(str(err)) from None


def serialize_quiver(q: BoundQuiver) -> str:
    if q.vertices == tuple(range(len(q.vertices))):
        lines = [f"vertices: {len(q.vertices)}"]
    else:
        lines = ["vertices: " + " ".join(str(v) for v in q.vertices)]
    for a in q.arrows:
        tail = f" {a.label}" if a.label else ""
        lines.append(f"arrow {a.id} {a.source} {a.target}{tail}")
    lines.extend(f"rel {a} {b}" for a, b in sorted(q.relations))
    return "\n".join(lines) + "\n"


def quiver_dot(q: BoundQuiver) -> str:
    """Each arrow passes through a point node so relations can join arrow midpoints."""
    out = ["digraph Q {", "  rankdir=LR;"]
    for v in q.vertices:
        out.append(f'  v{v} [label="{v}"];')
    for a in q.arrows:
        name = a.label or str(a.id)
        out.append(f'  m{a.id} [shape=point, xlabel="{name}"];')
        out.append(f"  v{a.source} -> m{a.id} [arrowhead=none];")
        out.append(f"  m{a.id} -> v{a.target};")
    for a, b in sorted(q.relations):
        out.append(f"  m{a} -> m{b} [style=dotted, arrowhead=none, constraint=false];")
    out.append("}")
    return "\n".join(out) + "\n"


def quiver_to_json(q: BoundQuiver) -> dict:
    arrows = []
    for a in q.arrows:
        entry = {"id": a.id, "source": a.source, "target": a.target}
        if a.label:
            entry["label"] = a.label
        arrows.append(entry)
    return {
        "vertices": list(q.vertices),
        "arrows": arrows,
        "relations": [list(r) for r in sorted(q.relations)],
    }


def angulation_to_json(a: Angulation) -> dict:
    return {
        "surface": a.surface.header(),
        "arcs": [arc.text() for arc in a.arcs],
        "faces": [f.text() for f in a.faces],
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
