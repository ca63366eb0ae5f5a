"""Small covers: characteristic matrices, rational Betti numbers, orientability.

For a small cover over a simple polytope with dual complex ``K`` and
characteristic matrix ``chi`` (``n`` rows over GF(2), one column per vertex
of ``K``) the rational Betti numbers are

    b_q = sum over S subset of rows of  dim H~_{q-1}(K restricted to supp(chi_S)),

where ``chi_S`` is the mod-2 sum of the rows in ``S``.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .homology import reduced_betti
from .linalg import BitMatrix, is_nonsingular_gf2
from .simplicial import (SimplicialComplex, all_faces, h_vector, induced_subcomplex,
                         is_connected, is_pseudomanifold, is_pure)

log = logging.getLogger(__name__)


class ValidationError(ValueError):
    """The characteristic matrix does not define a small cover over ``K``."""

    def __init__(self, message: str, face: tuple[int, ...] | None = None):
        super().__init__(message)
        self.face = face


class InconsistencyError(RuntimeError):
    """Two independent computations disagree; indicates a bug."""


@dataclass(frozen=True)
class CharMatrix:
    """``n x m`` matrix over GF(2), stored as column bitmasks.

    Bit ``i`` of ``columns[j]`` is the entry in row ``i`` (0-based) of the
    column attached to vertex ``j``.
    """

    n: int
    columns: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("characteristic matrix needs n >= 1 rows")
        for c in self.columns:
            if c < 0 or c >> self.n:
                raise ValueError(f"column {c:b} does not fit in {self.n} rows")

    @classmethod
    def from_lists(cls, n: int, columns: Sequence[Sequence[int]]) -> "CharMatrix":
        """Columns as length-``n`` integer lists; entries are reduced mod 2."""
        packed = []
        for j, col in enumerate(columns):
            if len(col) != n:
                raise ValueError(f"column {j} has {len(col)} entries, expected {n}")
            packed.append(sum(1 << i for i, x in enumerate(col) if int(x) % 2))
        return cls(n, tuple(packed))

    @property
    def m(self) -> int:
        return len(self.columns)

    def to_lists(self) -> list[list[int]]:
        return [[c >> i & 1 for i in range(self.n)] for c in self.columns]

    def row(self, i: int) -> int:
        """Row ``i`` as a bitmask over the ``m`` columns."""
        return sum(1 << j for j, c in enumerate(self.columns) if c >> i & 1)

    def minor(self, face: Sequence[int]) -> BitMatrix:
        return BitMatrix.from_columns([self.columns[j] for j in face], self.n)

    def left_multiply(self, rows: Sequence[int]) -> "CharMatrix":
        """``G @ chi`` for ``G`` given as ``n`` row bitmasks over ``n`` columns."""
        cols = []
        for c in self.columns:
            cols.append(sum(1 << i for i, g in enumerate(rows) if bin(g & c).count("1") % 2))
        return CharMatrix(self.n, tuple(cols))


@dataclass(frozen=True)
class SmallCover:
    K: SimplicialComplex
    chi: CharMatrix

    @property
    def n(self) -> int:
        return self.chi.n

    @property
    def m(self) -> int:
        return self.K.m


@dataclass
class BettiVector:
    """``betti[q]`` for ``q = 0..n`` with per-subset contributions.

    ``breakdown`` maps a row-subset bitmask ``S`` to ``{q: contribution}``
    (only nonzero contributions, every subset present).
    """

    betti: list[int]
    breakdown: dict[int, dict[int, int]] = field(default_factory=dict)

    def __getitem__(self, q: int) -> int:
        return self.betti[q]

    def __len__(self) -> int:
        return len(self.betti)

    def __iter__(self):
        return iter(self.betti)


def subset_members(S: int) -> list[int]:
    """1-based row indices in the bitmask ``S``."""
    return [i + 1 for i in range(S.bit_length()) if S >> i & 1]


def subset_mask(members) -> int:
    """Bitmask of a set of 1-based row indices."""
    return sum(1 << (i - 1) for i in set(members))


def validate(K: SimplicialComplex, chi: CharMatrix) -> SmallCover:
    """Check the GF(2) minor condition at every maximal face of ``K``."""
    n = chi.n
    if chi.m != K.m:
        raise ValidationError(f"chi has {chi.m} columns but K has {K.m} vertices")
    if K.is_void or not is_pure(K, n - 1):
        raise ValidationError(f"K is not pure of dimension {n - 1}")
    if not is_pseudomanifold(K, n - 1):
        raise ValidationError(f"K is not a pseudomanifold of dimension {n - 1}")
    for j, c in enumerate(chi.columns):
        if c == 0:
            raise ValidationError(f"column {j} ({K.labels[j]}) is zero", (j,))
    for face in K.maximal_faces:
        if not is_nonsingular_gf2(chi.minor(face)):
            names = ", ".join(K.labels[v] for v in face)
            raise ValidationError(f"singular minor at maximal face [{names}]", face)
    if n >= 2 and not is_connected(K):
        log.warning("K is disconnected; it cannot be dual to a polytope boundary")
    return SmallCover(K, chi)


def check_faces(K: SimplicialComplex, chi: CharMatrix) -> list[tuple[tuple[int, ...], bool]]:
    """Per maximal face: whether its column minor is nonsingular."""
    if chi.m != K.m:
        raise ValidationError(f"chi has {chi.m} columns but K has {K.m} vertices")
    out = []
    for face in K.maximal_faces:
        ok = len(face) == chi.n and is_nonsingular_gf2(chi.minor(face))
        out.append((face, ok))
    return out


def chi_row_sum(cover: SmallCover, S: int) -> int:
    """Mod-2 sum of the rows in bitmask ``S``, as a bitmask over vertices."""
    out = 0
    for i in range(cover.n):
        if S >> i & 1:
            out ^= cover.chi.row(i)
    return out


def support_subcomplex(cover: SmallCover, S: int) -> SimplicialComplex:
    v = chi_row_sum(cover, S)
    return induced_subcomplex(cover.K, [j for j in range(cover.m) if v >> j & 1])


def _subset_contribution(args: tuple[SmallCover, int, str]) -> tuple[int, dict[int, int]]:
    cover, S, method = args
    rb = reduced_betti(support_subcomplex(cover, S), method)
    return S, {q + 1: r for q, r in sorted(rb.tilde_b.items())}


def betti_numbers(cover: SmallCover, jobs: int = 1, method: str = "sparse") -> BettiVector:
    """Rational Betti numbers ``b_0..b_n`` summed over all ``2^n`` row subsets.

    Subsets are independent; ``jobs > 1`` farms them out to worker
    processes. The result does not depend on the schedule.
    """
    tasks = [(cover, S, method) for S in range(1 << cover.n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = dict(pool.map(_subset_contribution, tasks))
    else:
        results = dict(map(_subset_contribution, tasks))
    betti = [0] * (cover.n + 1)
    breakdown = {}
    for S in sorted(results):
        contrib = results[S]
        breakdown[S] = contrib
        for q, r in contrib.items():
            betti[q] += r
    return BettiVector(betti, breakdown)


def is_orientable(cover: SmallCover) -> tuple[bool, int | None]:
    """Orientable iff some nonempty row sum has no zero entry.

    Returns ``(True, S)`` with the least such bitmask, else ``(False, None)``.
    """
    full = (1 << cover.m) - 1
    for S in range(1, 1 << cover.n):
        if chi_row_sum(cover, S) == full:
            return True, S
    return False, None


def mod2_betti(cover: SmallCover) -> list[int]:
    """Mod-2 Betti numbers, equal to the h-vector of ``K``."""
    return h_vector(cover.K, cover.n)


def euler_characteristic(cover: SmallCover, betti: BettiVector | None = None) -> int:
    if betti is None:
        betti = betti_numbers(cover)
    chi_q = sum((-1) ** q * b for q, b in enumerate(betti))
    chi_2 = sum((-1) ** i * h for i, h in enumerate(mod2_betti(cover)))
    if chi_q != chi_2:
        raise InconsistencyError(
            f"Euler characteristic mismatch: rational {chi_q} vs mod 2 {chi_2}")
    return chi_q


def moment_angle_euler(K: SimplicialComplex, m: int | None = None) -> int:
    """Euler characteristic of the real moment-angle complex by cell count.

    A cell is a face ``sigma`` (the empty face included) together with a sign
    choice on the vertices outside ``sigma``; it has dimension ``|sigma|``.
    """
    if m is None:
        m = K.m
    levels = all_faces(K) or [[()]]
    return sum((-1) ** k * len(level) * 2 ** (m - k) for k, level in enumerate(levels))
