import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from realtoric.families import (complete_graph, cycle_graph, graph_associahedron_cover,
                                path_graph, permutahedron_cover, star_graph)
from realtoric.simplicial import SimplicialComplex
from realtoric.small_cover import CharMatrix, betti_numbers, validate

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"

E1, E2, E12 = [1, 0], [0, 1], [1, 1]


def cycle(m):
    return SimplicialComplex(m, tuple((i, (i + 1) % m) for i in range(m)))


def square_cover(columns):
    return validate(cycle(4), CharMatrix.from_lists(2, columns))


def torus_square():
    return square_cover([E1, E2, E1, E2])


def klein_square():
    return square_cover([E1, E2, E1, E12])


def catalog():
    """(name, cover) for every cover the cross-module invariants are run on."""
    out = [("torus-square", torus_square()), ("klein-square", klein_square())]
    out += [(f"permutahedron-{n}", permutahedron_cover(n)) for n in range(2, 7)]
    for name, make, lo in [("path", path_graph, 2), ("cycle", cycle_graph, 3),
                           ("star", star_graph, 3)]:
        out += [(f"{name}-{n}", graph_associahedron_cover(make(n))) for n in range(lo, 6)]
    return out


@lru_cache(maxsize=None)
def cached_catalog():
    return tuple((name, cover, betti_numbers(cover)) for name, cover in catalog())


@pytest.fixture(scope="session")
def catalog_results():
    return cached_catalog()


def pytest_terminal_summary(terminalreporter):
    lines = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if key == "passed" and rep.when != "call":
                continue
            name = nodeid.split("::")[1].split("[")[0]
            ok = key == "passed"
            lines[name] = lines.get(name, True) and ok
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name in sorted(lines):
            num = int(name.split("_")[2])
            label = name.split("_", 3)[3].replace("_", " ")
            terminalreporter.write_line(f"criterion {num:2d} {label}: {'PASS' if lines[name] else 'FAIL'}")
