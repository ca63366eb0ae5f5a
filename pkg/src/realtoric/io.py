"""JSON formats for complexes, characteristic matrices, problems and graphs.

complex  {"m": int, "labels": [str], "maximal_faces": [[int]]}   0-based
chi      {"n": int, "columns": [[int]]}                          entries mod 2
problem  {"complex": <complex>, "chi": <chi>}
graph    {"n": int, "edges": [[int, int]]}                       1-based
"""

from __future__ import annotations

import json
from pathlib import Path

from .families import Graph
from .simplicial import SimplicialComplex
from .small_cover import CharMatrix, SmallCover


class FormatError(ValueError):
    """Input file is not valid JSON or does not match the expected schema."""


def _need(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"missing key {key!r}")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise FormatError(f"{key!r} must be {kind.__name__}")
    return val


def _int_lists(val, key):
    if not all(isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r)
               for r in val):
        raise FormatError(f"{key!r} must be a list of integer lists")
    return val


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"m": K.m, "labels": list(K.labels), "maximal_faces": [list(f) for f in K.maximal_faces]}


def complex_from_json(obj) -> SimplicialComplex:
    m = _need(obj, "m", int)
    faces = _int_lists(_need(obj, "maximal_faces", list), "maximal_faces")
    labels = obj.get("labels") or []
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise FormatError("'labels' must be a list of strings")
    try:
        return SimplicialComplex(m, tuple(tuple(f) for f in faces), tuple(labels))
    except ValueError as e:
        raise FormatError(str(e)) from e


def chi_to_json(chi: CharMatrix) -> dict:
    return {"n": chi.n, "columns": chi.to_lists()}


def chi_from_json(obj) -> CharMatrix:
    n = _need(obj, "n", int)
    cols = _int_lists(_need(obj, "columns", list), "columns")
    try:
        return CharMatrix.from_lists(n, cols)
    except ValueError as e:
        raise FormatError(str(e)) from e


def problem_to_json(K: SimplicialComplex, chi: CharMatrix) -> dict:
    return {"complex": complex_to_json(K), "chi": chi_to_json(chi)}


def cover_to_json(cover: SmallCover) -> dict:
    return problem_to_json(cover.K, cover.chi)


def problem_from_json(obj) -> tuple[SimplicialComplex, CharMatrix]:
    return complex_from_json(_need(obj, "complex", dict)), chi_from_json(_need(obj, "chi", dict))


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_json(obj) -> Graph:
    n = _need(obj, "n", int)
    edges = _int_lists(_need(obj, "edges", list), "edges")
    if any(len(e) != 2 for e in edges):
        raise FormatError("each edge must have two endpoints")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as e:
        raise FormatError(str(e)) from e


def read_json(path: str | Path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise FormatError(f"{path}: {e}") from e


def load_problem(path: str | Path) -> tuple[SimplicialComplex, CharMatrix]:
    return problem_from_json(read_json(path))


def load_graph(path: str | Path) -> Graph:
    return graph_from_json(read_json(path))


def write_json(obj, path: str | Path):
    Path(path).write_text(json.dumps(obj, indent=2) + "\n")
