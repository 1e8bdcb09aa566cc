"""JSON readers and writers for posets, markings, graphs, colorings, triangles."""

import json

from .coloring import Graph, PartialColoring
from .errors import ParseError
from .marked import Marking
from .poset import build_poset
from .triangles import Triangle


def _label(x):
    # JSON arrays come back as lists; labels must be hashable
    return tuple(_label(y) for y in x) if isinstance(x, list) else x


def _jsonable(x):
    return [_jsonable(y) for y in x] if isinstance(x, tuple) else x


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(path, message=f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(path, message=f"invalid JSON in {path}: {exc}") from exc


def poset_from_json(data):
    try:
        elements = [_label(x) for x in data["elements"]]
        covers = [(_label(lo), _label(hi)) for lo, hi in data.get("covers", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(message=f"bad poset JSON: {exc!r}") from exc
    return build_poset(elements, covers)


def poset_to_json(P):
    return {"elements": [_jsonable(x) for x in P.elements],
            "covers": [[_jsonable(lo), _jsonable(hi)] for lo, hi in P.covers]}


def marking_from_json(data):
    try:
        P = poset_from_json(data["poset"])
        marked = [_label(x) for x in data.get("marked", list(data["values"]))]
        raw = data["values"]
        values = {}
        for a in marked:
            key = a if not isinstance(a, tuple) else json.dumps(_jsonable(a))
            v = raw[key]
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError(f"value of {a!r} is not an integer")
            values[a] = v
        if set(raw) != {a if not isinstance(a, tuple) else json.dumps(_jsonable(a)) for a in marked}:
            raise ValueError("'marked' and 'values' disagree")
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(message=f"bad marking JSON: {exc!r}") from exc
    return Marking(P, values)


def marking_to_json(m):
    return {
        "poset": poset_to_json(m.poset),
        "marked": [_jsonable(a) for a in m.marked],
        "values": {(a if not isinstance(a, tuple) else json.dumps(_jsonable(a))): m.values[a]
                   for a in m.marked},
    }


def graph_from_json(data):
    try:
        vertices = tuple(_label(v) for v in data["vertices"])
        edges = tuple((_label(u), _label(v)) for u, v in data.get("edges", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(message=f"bad graph JSON: {exc!r}") from exc
    return Graph(vertices, edges)


def coloring_from_json(data):
    try:
        k = int(data["k"])
        colors = {_label(a): int(c) for a, c in data.get("colors", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(message=f"bad coloring JSON: {exc!r}") from exc
    return PartialColoring(k, colors)


def triangle_from_json(data):
    try:
        return Triangle.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(message=f"bad triangle JSON: {exc!r}") from exc


def triangle_to_json(t):
    return t.to_dict()
