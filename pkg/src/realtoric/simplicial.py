"""Finite abstract simplicial complexes stored by their maximal faces."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Malformed complex or an operation applied outside its domain."""


def _maximal(faces: Iterable[Iterable[int]]) -> tuple[Face, ...]:
    uniq = {tuple(sorted(set(f))) for f in faces}
    uniq.discard(())
    # larger faces first, so a face only needs checking against bigger ones
    ordered = sorted(uniq, key=lambda f: (-len(f), f))
    kept: list[Face] = []
    kept_sets: list[frozenset[int]] = []
    for f in ordered:
        s = frozenset(f)
        if not any(s <= k for k in kept_sets if len(k) > len(s)):
            kept.append(f)
            kept_sets.append(s)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices ``0..m-1``.

    ``maximal_faces`` is normalized to an inclusion antichain of sorted
    tuples. A complex with no faces at all is the *void* complex; every
    other complex implicitly contains the empty face.
    """

    m: int
    maximal_faces: tuple[Face, ...] = ()
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.m < 0:
            raise ComplexError("vertex count must be nonnegative")
        faces = _maximal(self.maximal_faces)
        for f in faces:
            if f[0] < 0 or f[-1] >= self.m:
                raise ComplexError(f"face {list(f)} has a vertex outside [0, {self.m})")
        labels = tuple(self.labels) if self.labels else tuple(str(i) for i in range(self.m))
        if len(labels) != self.m:
            raise ComplexError(f"expected {self.m} labels, got {len(labels)}")
        if len(set(labels)) != self.m:
            raise ComplexError("vertex labels must be distinct")
        object.__setattr__(self, "maximal_faces", faces)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], m: int | None = None,
                   labels: Sequence[str] = ()) -> "SimplicialComplex":
        faces = [tuple(f) for f in faces]
        if m is None:
            m = 1 + max((v for f in faces for v in f), default=-1)
        return cls(m, tuple(faces), tuple(labels))

    @property
    def is_void(self) -> bool:
        return not self.maximal_faces

    @property
    def dimension(self) -> int:
        """Dimension of the largest face; -1 for the void complex."""
        return max((len(f) for f in self.maximal_faces), default=0) - 1

    def vertices(self) -> tuple[int, ...]:
        """Vertices that actually occur in some face."""
        return tuple(sorted({v for f in self.maximal_faces for v in f}))

    def __contains__(self, face) -> bool:
        s = set(face)
        if not s:
            return not self.is_void
        return any(s <= set(f) for f in self.maximal_faces)


def all_faces(K: SimplicialComplex) -> list[list[Face]]:
    """Closure of ``K`` grouped by cardinality; entry ``k`` holds the faces
    with ``k`` vertices (entry 0 is ``[()]``). Empty list for the void complex.
    """
    if K.is_void:
        return []
    top = max(len(f) for f in K.maximal_faces)
    levels: list[set[Face]] = [set() for _ in range(top + 1)]
    for f in K.maximal_faces:
        for k in range(len(f) + 1):
            levels[k].update(combinations(f, k))
    return [sorted(level) for level in levels]


def f_vector(K: SimplicialComplex) -> list[int]:
    """``[f_-1, f_0, ..., f_d]``; empty for the void complex."""
    return [len(level) for level in all_faces(K)]


def induced_subcomplex(K: SimplicialComplex, V: Iterable[int]) -> SimplicialComplex:
    """Full subcomplex on ``V``, renumbered ``0..|V|-1`` in increasing order.

    Original labels follow their vertices.
    """
    V = sorted(set(V))
    for v in V:
        if not 0 <= v < K.m:
            raise ComplexError(f"vertex {v} out of range [0, {K.m})")
    index = {v: i for i, v in enumerate(V)}
    keep = frozenset(V)
    # intersections of maximal faces with V generate the induced complex
    faces = [tuple(index[v] for v in f if v in keep) for f in K.maximal_faces]
    return SimplicialComplex(len(V), tuple(faces), tuple(K.labels[v] for v in V))


def is_pure(K: SimplicialComplex, d: int) -> bool:
    return all(len(f) == d + 1 for f in K.maximal_faces)


def is_pseudomanifold(K: SimplicialComplex, d: int) -> bool:
    """Pure of dimension ``d`` with every ``(d-1)``-face in exactly two facets."""
    if K.is_void or not is_pure(K, d):
        return False
    counts: dict[Face, int] = {}
    for f in K.maximal_faces:
        for ridge in combinations(f, d):
            counts[ridge] = counts.get(ridge, 0) + 1
    return all(c == 2 for c in counts.values())


def is_connected(K: SimplicialComplex) -> bool:
    verts = K.vertices()
    if not verts:
        return True
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in K.maximal_faces:
        root = find(f[0])
        for v in f[1:]:
            parent[find(v)] = root
    return len({find(v) for v in verts}) == 1


def h_vector(K: SimplicialComplex, n: int) -> list[int]:
    """h-vector ``(h_0, ..., h_n)`` of a complex pure of dimension ``n - 1``.

    Uses ``h_k = sum_i (-1)^(k-i) C(n-i, k-i) f_(i-1)``.
    """
    if K.is_void or not is_pure(K, n - 1):
        raise ComplexError(f"h-vector needs a complex pure of dimension {n - 1}")
    f = f_vector(K)  # f[i] == f_(i-1)
    return [sum((-1) ** (k - i) * comb(n - i, k - i) * f[i] for i in range(k + 1))
            for k in range(n + 1)]


def subset_label(Q: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(Q)) + "}"


def proper_subsets(n: int) -> list[tuple[int, ...]]:
    """Nonempty proper subsets of ``{1..n}`` ordered by (size, lex)."""
    return [Q for k in range(1, n) for Q in combinations(range(1, n + 1), k)]


def barycentric_subdivision_of_simplex_boundary(n: int) -> SimplicialComplex:
    """Order complex of the proper part of the Boolean lattice on ``{1..n}``.

    Vertex ``i`` is the ``i``-th subset of :func:`proper_subsets`; maximal
    faces are the ``n!`` maximal chains.
    """
    if n < 2:
        raise ComplexError("barycentric subdivision needs n >= 2")
    subsets = proper_subsets(n)
    index = {frozenset(Q): i for i, Q in enumerate(subsets)}
    facets = []
    for perm in permutations(range(1, n + 1)):
        facets.append(tuple(sorted(index[frozenset(perm[:k])] for k in range(1, n))))
    return SimplicialComplex(len(subsets), tuple(facets), tuple(subset_label(Q) for Q in subsets))
