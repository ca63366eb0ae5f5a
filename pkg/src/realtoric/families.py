"""Generators: permutahedral small covers, secant numbers, graph associahedra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterable

from .simplicial import (SimplicialComplex, barycentric_subdivision_of_simplex_boundary,
                         subset_label)
from .small_cover import CharMatrix, SmallCover, support_subcomplex, validate


def _basis_column(n: int, Q: Iterable[int]) -> int:
    """Column for the subset ``Q`` of ``{1..n}``: sum of the generators
    ``e_1..e_(n-1)`` and ``e_1 + ... + e_(n-1)`` (for ``n``) over ``Q``."""
    all_ones = (1 << (n - 1)) - 1
    col = 0
    for i in Q:
        col ^= all_ones if i == n else 1 << (i - 1)
    return col


def permutahedron_cover(n: int) -> SmallCover:
    """Real toric variety of the permutahedron on ``n`` letters (dimension ``n-1``)."""
    K = barycentric_subdivision_of_simplex_boundary(n)
    subsets = [tuple(int(x) for x in lab.strip("{}").split(",")) for lab in K.labels]
    chi = CharMatrix(n - 1, tuple(_basis_column(n, Q) for Q in subsets))
    return validate(K, chi)


@lru_cache(maxsize=None)
def _secant_cached(k: int) -> tuple[int, ...]:
    # invert the cosine series: c_{2i} = (-1)^i / (2i)!
    cos = [Fraction((-1) ** i, factorial(2 * i)) for i in range(k + 1)]
    sec = [Fraction(1)]
    for i in range(1, k + 1):
        sec.append(-sum(cos[j] * sec[i - j] for j in range(1, i + 1)))
    out = []
    for i, s in enumerate(sec):
        a = s * factorial(2 * i)
        assert a.denominator == 1
        out.append(int(a))
    return tuple(out)


def secant_numbers(k: int) -> list[int]:
    """Euler secant numbers ``[A_0, A_2, ..., A_2k]``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    table = list(_secant_cached(k))
    for i in range(1, k + 1):
        if sum((-1) ** j * comb(2 * i, 2 * j) * table[i - j] for j in range(i + 1)):
            raise ArithmeticError(f"sec*cos != 1 at order {2 * i}")
    return table


def hessenberg_betti_closed_form(n: int, i: int) -> int:
    """``A_2i * C(n, 2i)``."""
    if 2 * i > n:
        return 0
    return secant_numbers(i)[i] * comb(n, 2 * i)


def k_n_r(n: int, r: int) -> SimplicialComplex:
    """Support complex of the permutahedral cover for the rows ``{1..r}``."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"need 1 <= r <= n-1, got n={n}, r={r}")
    return support_subcomplex(permutahedron_cover(n), (1 << r) - 1)


@dataclass(frozen=True)
class Graph:
    """Simple graph on ``{1..n}``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs n >= 1")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {e} outside 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    def neighbours(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def is_connected_on(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        if not vs:
            return False
        start = next(iter(vs))
        seen, stack = {start}, [start]
        while stack:
            for w in self.neighbours(stack.pop()) & vs:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == vs


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(1, i) for i in range(2, n + 1)])


def _require_connected(g: Graph):
    if not g.is_connected_on(range(1, g.n + 1)):
        raise ValueError("graph associahedra are only generated for connected graphs")


def tubes(g: Graph) -> list[tuple[int, ...]]:
    """Proper nonempty vertex subsets inducing connected subgraphs, by (size, lex)."""
    _require_connected(g)
    return [t for k in range(1, g.n) for t in combinations(range(1, g.n + 1), k)
            if g.is_connected_on(t)]


def are_compatible(g: Graph, t1: Iterable[int], t2: Iterable[int]) -> bool:
    """Nested, or disjoint with a disconnected union."""
    a, b = set(t1), set(t2)
    if a <= b or b <= a:
        return True
    # the full vertex set belongs to the building set, so a connected union
    # (proper or not) rules the pair out
    return not (a & b) and not g.is_connected_on(a | b)


def nested_set_complex(g: Graph) -> SimplicialComplex:
    """Flag complex of pairwise compatible tubes, vertices labeled by tube."""
    ts = tubes(g)
    adj = [set() for _ in ts]
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            if are_compatible(g, ts[i], ts[j]):
                adj[i].add(j)
                adj[j].add(i)

    facets = []

    def extend(clique: list[int], candidates: set[int], excluded: set[int]):
        if not candidates and not excluded:
            facets.append(tuple(clique))
            return
        for v in sorted(candidates):
            extend(clique + [v], candidates & adj[v], excluded & adj[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    extend([], set(range(len(ts))), set())
    K = SimplicialComplex(len(ts), tuple(facets), tuple(subset_label(t) for t in ts))
    if K.dimension != g.n - 2 or any(len(f) != g.n - 1 for f in K.maximal_faces):
        raise AssertionError(f"nested set complex is not pure of dimension {g.n - 2}")
    return K


def graph_associahedron_cover(g: Graph) -> SmallCover:
    """Small cover over the graph associahedron; tube ``t`` gets the column
    of the permutahedron rule applied to ``t``."""
    if g.n < 2:
        raise ValueError("graph associahedron cover needs n >= 2")
    K = nested_set_complex(g)
    ts = tubes(g)
    chi = CharMatrix(g.n - 1, tuple(_basis_column(g.n, t) for t in ts))
    return validate(K, chi)
