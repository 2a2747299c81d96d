"""Facet files, coloring input, and run reports.

Facet file format: one facet per line as whitespace-separated labels; ``#``
starts a comment; blank lines are ignored.  A comment of the form
``# vertices: a b c`` fixes the vertex order (other tools just see a comment).
"""

from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .asc import SimplicialComplex
from .coloring import Coloring
from .errors import EmptyComplexError, MalformedInputError

_VERTICES = re.compile(r"#\s*vertices:(.*)$")


def parse_facets(text: str) -> SimplicialComplex:
    facets: list[list[str]] = []
    vertices: list[str] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        directive = _VERTICES.match(raw.strip())
        if directive:
            vertices = directive.group(1).split()
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        labels = line.split()
        if len(set(labels)) != len(labels):
            dup = next(x for x in labels if labels.count(x) > 1)
            raise MalformedInputError(f"label {dup!r} repeated within a facet", line=lineno)
        facets.append(labels)
    if not facets:
        raise EmptyComplexError("no facets found")
    try:
        return SimplicialComplex.from_facets(facets, vertices=vertices)
    except KeyError as exc:
        raise MalformedInputError(f"label {exc.args[0]!r} is not listed in the vertices line") from None


def render_facets(K: SimplicialComplex, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("# vertices: " + " ".join(K.vertices.labels))
    lines.extend(" ".join(f) for f in K.facet_labels())
    return "\n".join(lines) + "\n"


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from None


def read_complex(path: str) -> SimplicialComplex:
    return parse_facets(read_text(path))


def write_text(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def parse_coloring(source: str, K: SimplicialComplex) -> Coloring:
    """One-based color ids, comma or whitespace separated, aligned with K's vertex order.

    ``source`` is either the list itself or a path to a file holding it.
    """
    text = source
    if not re.fullmatch(r"[\d,\s]+", source) and Path(source).exists():
        text = Path(source).read_text()
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    try:
        colors = [int(t) for t in tokens]
    except ValueError:
        raise MalformedInputError(f"coloring must be integers, got {text.strip()!r}") from None
    if len(colors) != K.m:
        raise MalformedInputError(f"coloring has {len(colors)} entries, complex has {K.m} vertices")
    return Coloring.from_one_based(colors)


def complex_summary(K: SimplicialComplex) -> dict:
    fv = list(K.f_vector())
    return {"m": K.m, "n": K.n, "dim": K.dim, "codim": K.codim, "f_vector": fv, "f_vector_reduced": fv[1:]}


@dataclass
class RunReport:
    command: list[str]
    complex: dict
    result: dict
    wall_time: float = 0.0
    text_lines: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"command": self.command, "complex": self.complex, "result": self.result,
                "wall_time": round(self.wall_time, 6)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "complex", "result", "wall_time"],
    "properties": {
        "command": {"type": "array", "items": {"type": "string"}},
        "complex": {
            "type": "object",
            "required": ["m", "n", "dim", "codim", "f_vector", "f_vector_reduced"],
            "properties": {
                "m": {"type": "integer"},
                "n": {"type": "integer"},
                "f_vector": {"type": "array", "items": {"type": "integer"}},
            },
        },
        "result": {"type": "object"},
        "wall_time": {"type": "number"},
    },
}

CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["complex", "s", "coloring", "verdict", "lhs", "rhs", "factors"],
    "properties": {
        "complex": {"type": "string"},
        "s": {"type": "integer", "minimum": 1},
        "coloring": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "verdict": {"type": "boolean"},
        "lhs": {"type": "string"},
        "rhs": {"type": "string"},
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["color", "poly"],
                "properties": {"color": {"type": "integer"}, "poly": {"type": "string"}},
            },
        },
    },
}

