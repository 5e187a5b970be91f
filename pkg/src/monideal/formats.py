"""Text and JSON formats for ideals, graphs, series and Betti tables.

Ideal text format::

    vars x1,x2,x3
    # comment
    x1^2*x2
    x3

Graph format: ``vertices <n>`` followed by one ``u v`` pair per line, 1-indexed.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .families import Graph
from .ideal import IdealError, MonomialIdeal, MonomialSyntaxError, RingContext, make_ideal, parse_monomial


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


def _read(path_or_text) -> str:
    if isinstance(path_or_text, Path):
        return path_or_text.read_text()
    text = str(path_or_text)
    if "\n" not in text and os.path.isfile(text):
        return Path(text).read_text()
    return text


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_ideal_text(text: str) -> MonomialIdeal:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("missing 'vars' header", 1, 1)
    lineno, header = lines[0]
    keyword, _, rest = header.partition(" ")
    if keyword != "vars":
        raise FormatError("expected 'vars <name>,<name>,...'", lineno, 1)
    names = [v.strip() for v in rest.split(",") if v.strip()]
    if not names:
        raise FormatError("empty variable list", lineno, 6)
    try:
        ring = RingContext(tuple(names))
    except IdealError as exc:
        raise FormatError(str(exc), lineno, 6) from None
    gens = []
    for lineno, line in lines[1:]:
        try:
            gens.append(parse_monomial(ring, line))
        except MonomialSyntaxError as exc:
            raise FormatError(str(exc), lineno, exc.column) from None
    return make_ideal(ring, gens)


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ring.var_names), "gens": [list(g) for g in I.gens]}


def ideal_from_json(data) -> MonomialIdeal:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        ring = RingContext(tuple(data["vars"]))
        return make_ideal(ring, (tuple(g) for g in data["gens"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed ideal JSON: {exc}") from None


def parse_ideal_file(path_or_text) -> MonomialIdeal:
    """Ideal from a file path or literal text, in the text format or as JSON."""
    text = _read(path_or_text)
    if text.lstrip().startswith("{"):
        try:
            return ideal_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, exc.lineno, exc.colno) from None
    return parse_ideal_text(text)


def parse_graph_file(path_or_text) -> Graph:
    lines = list(_content_lines(_read(path_or_text)))
    if not lines:
        raise FormatError("missing 'vertices' header", 1, 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "vertices" or not parts[1].isdigit():
        raise FormatError("expected 'vertices <n>'", lineno, 1)
    n = int(parts[1])
    edges = []
    for lineno, line in lines[1:]:
        pair = line.split()
        if len(pair) != 2 or not all(p.isdigit() for p in pair):
            raise FormatError("expected an edge 'u v'", lineno, 1)
        edges.append((int(pair[0]), int(pair[1])))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_graph(G: Graph) -> str:
    rows = [f"vertices {G.num_vertices}"] + [f"{u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(rows) + "\n"


def format_ideal(I: MonomialIdeal) -> str:
    rows = ["vars " + ",".join(I.ring.var_names)]
    rows += [I.ring.format_monomial(g) for g in I.gens]
    return "\n".join(rows) + "\n"
