"""Exact ranks: integer matrices over Q and bit matrices over GF(2)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(col) for col in zip(*self.to_rows())], self.rows) \
            if self.rows else IntMatrix.zeros(self.cols, 0)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.to_rows(), other.to_rows()
        bt = list(zip(*b)) if b else [()] * other.cols
        out = [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
        return IntMatrix(self.rows, other.cols, tuple(x for r in out for x in r))

    def is_zero(self) -> bool:
        return not any(self.entries)


def rank_q(A: IntMatrix, check: bool = False) -> int:
    """Rank over Q by fraction-free Bareiss elimination.

    Pivots are the first nonzero entry of the trailing block in row-major
    order. With ``check`` every Bareiss division is asserted to be exact.
    """
    M = A.to_rows()
    nrows, ncols = A.rows, A.cols
    prev = 1
    k = 0
    while k < min(nrows, ncols):
        piv = next(((i, j) for i in range(k, nrows) for j in range(k, ncols) if M[i][j]), None)
        if piv is None:
            break
        i, j = piv
        M[k], M[i] = M[i], M[k]
        if j != k:
            for row in M:
                row[k], row[j] = row[j], row[k]
        p = M[k][k]
        pk = M[k]
        for i in range(k + 1, nrows):
            row = M[i]
            a = row[k]
            for j in range(k + 1, ncols):
                num = p * row[j] - a * pk[j]
                if check:
                    q, r = divmod(num, prev)
                    assert r == 0, "Bareiss division not exact"
                    row[j] = q
                else:
                    row[j] = num // prev
            row[k] = 0
        prev = p
        k += 1
    return k


def rank_q_sparse(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given as ``{col: value}`` rows.

    Rows are reduced one at a time against the pivot rows found so far
    (keyed by leading column) with integer row operations; each reduced row
    is divided by the gcd of its entries to keep coefficients small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for src in rows:
        row = {c: v for c, v in src.items() if v}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
                pivots[lead] = row
                break
            a, p = row[lead], prow[lead]
            if p in (1, -1):
                f = a * p
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                new = {c: p * v for c, v in row.items()}
                for c, v in prow.items():
                    nv = new.get(c, 0) - a * v
                    if nv:
                        new[c] = nv
                    else:
                        new.pop(c, None)
                row = new
    return len(pivots)


@dataclass(frozen=True)
class BitMatrix:
    """Rows over GF(2) packed into ints; bit ``j`` of a row is column ``j``."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count mismatch")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError(f"row {r:b} has bits beyond {self.cols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        packed = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            packed.append(sum(1 << j for j, x in enumerate(r) if x % 2))
        return cls(len(rows), cols, tuple(packed))

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> "BitMatrix":
        """Build from column bitmasks (bit ``i`` of a column is row ``i``)."""
        data = tuple(sum(1 << j for j, c in enumerate(columns) if c >> i & 1) for i in range(rows))
        return cls(rows, len(columns), data)


def rank_gf2(A: BitMatrix) -> int:
    basis: dict[int, int] = {}  # leading bit -> row
    for row in A.data:
        while row:
            lead = row.bit_length() - 1
            b = basis.get(lead)
            if b is None:
                basis[lead] = row
                break
            row ^= b
    return len(basis)


def is_nonsingular_gf2(A: BitMatrix) -> bool:
    if A.rows != A.cols:
        raise ValueError(f"nonsingularity needs a square matrix, got {A.rows}x{A.cols}")
    return rank_gf2(A) == A.rows
