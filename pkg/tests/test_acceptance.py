"""Exit criteria. Each test is one criterion; a PASS/FAIL line per criterion
is printed in the terminal summary."""

import json
import random
import time
from math import ceil, comb

import pytest

from realtoric.cli import main
from realtoric.families import (complete_graph, graph_associahedron_cover,
                                hessenberg_betti_closed_form, k_n_r, path_graph,
                                permutahedron_cover, secant_numbers)
from realtoric.homology import build_chain_complex, reduced_betti
from realtoric.simplicial import SimplicialComplex
from realtoric.small_cover import (betti_numbers, euler_characteristic, is_orientable,
                                   mod2_betti, moment_angle_euler, support_subcomplex, validate)

from conftest import PROBLEMS, klein_square, torus_square
from oracles import (count_alternating_permutations, random_complex_faces, reduced_betti_oracle,
                     sec_cos_product)


def test_criterion_01_square_covers():
    t0 = time.perf_counter()
    torus, klein = torus_square(), klein_square()
    assert list(betti_numbers(torus)) == [1, 2, 1]
    assert is_orientable(torus) == (True, 0b11)  # witness S = {1, 2}
    assert list(betti_numbers(klein)) == [1, 1, 0]
    assert is_orientable(klein) == (False, None)
    assert time.perf_counter() - t0 < 1.0


def test_criterion_02_hessenberg_reproduction():
    for n in range(2, 7):
        t0 = time.perf_counter()
        cover = permutahedron_cover(n)
        b = betti_numbers(cover)
        elapsed = time.perf_counter() - t0
        assert list(b) == [hessenberg_betti_closed_form(n, i) for i in range(n)]
        if n == 6:
            assert (cover.m, len(cover.K.maximal_faces), len(b.breakdown)) == (62, 720, 32)
            assert elapsed < 120.0


def test_criterion_03_wedge_of_spheres():
    A = secant_numbers(5)
    for n in range(2, 6):
        cover = permutahedron_cover(n)
        for r in range(1, n):
            s = ceil(r / 2)
            expected = {s - 1: A[s]}
            assert reduced_betti(k_n_r(n, r)).tilde_b == expected
            tables = [reduced_betti(support_subcomplex(cover, S)).tilde_b
                      for S in range(1 << (n - 1)) if bin(S).count("1") == r]
            assert len(tables) == comb(n - 1, r)
            assert all(t == expected for t in tables)


def test_criterion_04_secant_identity():
    A = secant_numbers(20)
    for i in range(1, 21):
        assert sum((-1) ** j * comb(2 * i, 2 * j) * A[i - j] for j in range(i + 1)) == 0
    assert A[1:5] == [1, 5, 61, 1385]
    assert sec_cos_product(A[:5]) == [1, 0, 0, 0, 0]
    assert A[1:5] == [count_alternating_permutations(2 * i) for i in range(1, 5)]


def test_criterion_05_davis_januszkiewicz(catalog_results):
    for name, cover, b in catalog_results:
        h = mod2_betti(cover)
        assert sum((-1) ** q * x for q, x in enumerate(b)) == \
            sum((-1) ** i * x for i, x in enumerate(h)), name
        assert sum(b) <= sum(h), name


def test_criterion_06_covering_identity(catalog_results):
    for name, cover, b in catalog_results:
        euler = euler_characteristic(cover, b)
        assert moment_angle_euler(cover.K, cover.m) == 2 ** (cover.m - cover.n) * euler, name


def test_criterion_07_orientability(catalog_results):
    seen = set()
    for name, cover, b in catalog_results:
        orientable, witness = is_orientable(cover)
        assert orientable == (b[cover.n] == 1), name
        if orientable:
            assert witness is not None
        seen.add(orientable)
    assert seen == {True, False}


def test_criterion_08_graph_associahedra(catalog_results):
    for n in range(2, 6):
        assert list(betti_numbers(graph_associahedron_cover(complete_graph(n)))) == \
            list(betti_numbers(permutahedron_cover(n)))
    assert list(betti_numbers(graph_associahedron_cover(path_graph(3)))) == [1, 2, 0]
    for name, cover, _ in catalog_results:
        assert validate(cover.K, cover.chi) == cover, name


def test_criterion_09_homology_oracle():
    rng = random.Random(9)
    for _ in range(250):
        m, faces = random_complex_faces(rng)
        K = SimplicialComplex(m, tuple(faces))
        assert reduced_betti(K).tilde_b == reduced_betti_oracle(m, faces), (m, faces)
        C = build_chain_complex(K)
        for q in range(1, C.top + 1):
            assert (C.boundary(q - 1) @ C.boundary(q)).is_zero()


@pytest.mark.parametrize("argv", [
    ["betti", str(PROBLEMS / "torus-square.json")],
    ["betti", str(PROBLEMS / "klein-square.json")],
] + [["permutahedron", str(n)] for n in range(2, 7)])
def test_criterion_10_determinism(argv, capsys):
    outputs = []
    for jobs in ("1", "8"):
        assert main(argv + ["--json", "--breakdown", "--jobs", jobs]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    json.loads(outputs[0])
