"""Reading and writing algebra presentations.

Text format, one declaration per line, ``#`` starts a comment::

    vertex 1
    vertex 2
    arrow alpha 1 2 1
    rel alpha beta

JSON format::

    {"vertices": ["1", "2"],
     "arrows": [{"id": "alpha", "src": "1", "tgt": "2", "deg": 1}],
     "relations": [["alpha", "beta"]]}
"""

from __future__ import annotations

import json
import sys

from .algebra import Arrow, GentleAlgebra, GradedQuiver
from .errors import PresentationError

__all__ = ["parse_text", "parse_json", "parse", "load", "format_text", "format_json", "to_dict"]


def parse_text(text: str) -> GentleAlgebra:
    vertices: list[str] = []
    vertex_line: dict[str, int] = {}
    arrows: list[Arrow] = []
    arrow_line: dict[str, int] = {}
    relations: list[tuple[str, str]] = []
    rel_lines: dict[tuple[str, str], int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw, *args = line.split()
        if kw == "vertex":
            if len(args) != 1:
                raise PresentationError("expected 'vertex <name>'", lineno)
            (name,) = args
            if name in vertex_line:
                raise PresentationError(
                    f"duplicate vertex {name!r} (first declared on line {vertex_line[name]})", lineno
                )
            vertex_line[name] = lineno
            vertices.append(name)
        elif kw == "arrow":
            if len(args) != 4:
                raise PresentationError("expected 'arrow <name> <src> <tgt> <deg>'", lineno)
            name, src, tgt, deg = args
            if name in arrow_line:
                raise PresentationError(
                    f"duplicate arrow {name!r} (first declared on line {arrow_line[name]})", lineno
                )
            try:
                degree = int(deg)
            except ValueError:
                raise PresentationError(f"degree {deg!r} is not an integer", lineno) from None
            for end in (src, tgt):
                if end not in vertex_line:
                    raise PresentationError(f"arrow {name!r} uses undeclared vertex {end!r}", lineno)
            arrow_line[name] = lineno
            arrows.append(Arrow(name, src, tgt, degree))
        elif kw == "rel":
            if len(args) != 2:
                raise PresentationError("expected 'rel <arrow1> <arrow2>'", lineno)
            pair = (args[0], args[1])
            for a in pair:
                if a not in arrow_line:
                    raise PresentationError(f"relation uses undeclared arrow {a!r}", lineno)
            if pair in rel_lines:
                raise PresentationError(
                    f"duplicate relation {pair[0]} {pair[1]} (first on line {rel_lines[pair]})", lineno
                )
            rel_lines[pair] = lineno
            relations.append(pair)
        else:
            raise PresentationError(f"unknown keyword {kw!r}", lineno)

    return GentleAlgebra(GradedQuiver(tuple(vertices), tuple(arrows)), frozenset(relations))


def parse_json(text_or_obj) -> GentleAlgebra:
    if isinstance(text_or_obj, str):
        try:
            data = json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise PresentationError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    else:
        data = text_or_obj
    if not isinstance(data, dict):
        raise PresentationError("JSON presentation must be an object")
    try:
        vertices = [str(v) for v in data.get("vertices", [])]
        arrows = [
            Arrow(str(a["id"]), str(a["src"]), str(a["tgt"]), _json_int(a.get("deg", 0), a["id"]))
            for a in data.get("arrows", [])
        ]
        relations = [tuple(map(str, r)) for r in data.get("relations", [])]
    except (KeyError, TypeError) as exc:
        raise PresentationError(f"malformed JSON presentation: {exc}") from None
    if any(len(r) != 2 for r in relations):
        raise PresentationError("each relation must be a pair of arrow ids")
    if len(set(relations)) != len(relations):
        raise PresentationError("duplicate relation")
    names = {a.name for a in arrows}
    for r in relations:
        for a in r:
            if a not in names:
                raise PresentationError(f"relation uses undeclared arrow {a!r}")
    return GentleAlgebra(GradedQuiver(tuple(vertices), tuple(arrows)), frozenset(relations))


def _json_int(value, name) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise PresentationError(f"arrow {name!r} has non-integer degree {value!r}")
    return value


def parse(text: str) -> GentleAlgebra:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def load(path: str) -> GentleAlgebra:
    """Read a presentation from ``path``; ``-`` means standard input."""
    if path == "-":
        return parse(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _sorted_relations(A: GentleAlgebra):
    order = {a.name: i for i, a in enumerate(A.arrows)}
    return sorted(A.relations, key=lambda r: (order[r[0]], order[r[1]]))


def format_text(A: GentleAlgebra) -> str:
    lines = [f"vertex {v}" for v in A.vertices]
    lines += [f"arrow {a.name} {a.source} {a.target} {a.degree}" for a in A.arrows]
    lines += [f"rel {x} {y}" for x, y in _sorted_relations(A)]
    return "\n".join(lines) + "\n"


def to_dict(A: GentleAlgebra) -> dict:
    return {
        "vertices": list(A.vertices),
        "arrows": [{"id": a.name, "src": a.source, "tgt": a.target, "deg": a.degree} for a in A.arrows],
        "relations": [list(r) for r in _sorted_relations(A)],
    }


def format_json(A: GentleAlgebra) -> str:
    return json.dumps(to_dict(A), indent=2) + "\n"
