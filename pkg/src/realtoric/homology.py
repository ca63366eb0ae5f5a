"""Augmented simplicial chain complexes and reduced rational Betti numbers."""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import IntMatrix, rank_q, rank_q_sparse
from .simplicial import Face, SimplicialComplex, all_faces


@dataclass(frozen=True)
class ChainComplexQ:
    """Augmented chain complex of a simplicial complex.

    ``bases[q + 1]`` lists the q-faces in lexicographic order, so
    ``bases[0] == [()]`` is the (-1)-dimensional face for a nonvoid complex.
    """

    bases: tuple[tuple[Face, ...], ...]

    @property
    def top(self) -> int:
        return len(self.bases) - 2

    def basis(self, q: int) -> tuple[Face, ...]:
        if -1 <= q <= self.top:
            return self.bases[q + 1]
        return ()

    def boundary_rows(self, q: int) -> list[dict[int, int]]:
        """Transpose of the q-th boundary: one ``{(q-1)-face index: sign}``
        dict per q-face."""
        if q < 0:
            return []
        lower = {f: i for i, f in enumerate(self.basis(q - 1))}
        out = []
        for f in self.basis(q):
            out.append({lower[f[:j] + f[j + 1:]]: (-1) ** j for j in range(len(f))})
        return out

    def boundary(self, q: int) -> IntMatrix:
        """Dense boundary from q-chains to (q-1)-chains (rows index (q-1)-faces)."""
        rows, cols = len(self.basis(q - 1)), len(self.basis(q))
        entries = [0] * (rows * cols)
        for j, col in enumerate(self.boundary_rows(q)):
            for i, v in col.items():
                entries[i * cols + j] = v
        return IntMatrix(rows, cols, tuple(entries))


def build_chain_complex(K: SimplicialComplex) -> ChainComplexQ:
    return ChainComplexQ(tuple(tuple(level) for level in all_faces(K)))


@dataclass(frozen=True)
class ReducedBetti:
    """Nonzero reduced Betti numbers keyed by degree."""

    tilde_b: dict[int, int]

    def __getitem__(self, q: int) -> int:
        return self.tilde_b.get(q, 0)


def reduced_betti(K: SimplicialComplex, method: str = "sparse") -> ReducedBetti:
    """Reduced rational Betti numbers from boundary ranks.

    ``method`` picks the exact rank kernel: ``"sparse"`` (row-insertion
    elimination, the default) or ``"bareiss"`` (dense fraction-free).
    """
    # The void complex gets H~_{-1} = Q: it is the S = empty term of the
    # Betti formula and must contribute exactly b_0 = 1.
    if K.is_void:
        return ReducedBetti({-1: 1})
    C = build_chain_complex(K)
    if method == "sparse":
        ranks = {q: rank_q_sparse(C.boundary_rows(q)) for q in range(0, C.top + 1)}
    elif method == "bareiss":
        ranks = {q: rank_q(C.boundary(q)) for q in range(0, C.top + 1)}
    else:
        raise ValueError(f"unknown rank method {method!r}")
    out = {}
    for q in range(-1, C.top + 1):
        b = len(C.basis(q)) - ranks.get(q, 0) - ranks.get(q + 1, 0)
        if b:
            out[q] = b
    return ReducedBetti(out)


def reduced_betti_in_degree(K: SimplicialComplex, q: int, method: str = "sparse") -> int:
    return reduced_betti(K, method)[q]
