"""Exact dense linear algebra over the rationals.

Elimination is plain Gauss-Jordan with first-nonzero pivoting. Rows are
held sparsely while eliminating because the condition matrices built by
:mod:`macaulay.dualspace` are mostly zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ShapeMismatch

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class RationalMatrix:
    nrows: int
    ncols: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ShapeMismatch(f"entries do not form a {self.nrows}x{self.ncols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None):
        rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ShapeMismatch("column count required for an empty matrix")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_sparse(cls, rows: Sequence[dict], ncols: int):
        dense = []
        for r in rows:
            line = [_ZERO] * ncols
            for c, v in r.items():
                line[c] = Fraction(v)
            dense.append(tuple(line))
        return cls(len(dense), ncols, tuple(dense))

    @classmethod
    def identity(cls, n):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols, tuple((_ZERO,) * ncols for _ in range(nrows)))

    @property
    def entries(self):
        """Row-major flat view."""
        return tuple(v for r in self.rows for v in r)

    def __matmul__(self, vector):
        if len(vector) != self.ncols:
            raise ShapeMismatch(f"vector of length {len(vector)} for {self.ncols} columns")
        return tuple(sum((a * b for a, b in zip(r, vector) if a), _ZERO) for r in self.rows)

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        if other.ncols != self.ncols:
            raise ShapeMismatch(f"{self.ncols} vs {other.ncols} columns")
        return RationalMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)


def _sparse_rref(rows, ncols):
    rows = [{c: v for c, v in enumerate(r) if v} for r in rows]
    rows = [r for r in rows if r]
    pivots = []
    rank = 0
    for col in range(ncols):
        if rank == len(rows):
            break
        for k in range(rank, len(rows)):
            if col in rows[k]:
                break
        else:
            continue
        rows[rank], rows[k] = rows[k], rows[rank]
        prow = rows[rank]
        inv = _ONE / prow[col]
        if inv != 1:
            for c in prow:
                prow[c] *= inv
        for k, r in enumerate(rows):
            if k == rank:
                continue
            factor = r.get(col)
            if factor is None:
                continue
            for c, v in prow.items():
                s = r.get(c, _ZERO) - factor * v
                if s:
                    r[c] = s
                else:
                    r.pop(c, None)
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def rref(M: RationalMatrix) -> tuple[RationalMatrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    Zero rows are kept at the bottom so ``R`` has the shape of ``M``.
    """
    nonzero, pivots = _sparse_rref(M.rows, M.ncols)
    rank = len(pivots)
    R = RationalMatrix.from_sparse(nonzero + [{}] * (M.nrows - rank), M.ncols)
    return R, rank, pivots


def rank(M: RationalMatrix) -> int:
    return len(_sparse_rref(M.rows, M.ncols)[1])


def null_space(M: RationalMatrix) -> list[tuple]:
    """Canonical kernel basis: one vector per free column, that coordinate = 1."""
    nonzero, pivots = _sparse_rref(M.rows, M.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        v = [_ZERO] * M.ncols
        v[free] = _ONE
        for r, p in zip(nonzero, pivots):
            a = r.get(free)
            if a:
                v[p] = -a
        basis.append(tuple(v))
    return basis


def row_space_equal(A: RationalMatrix, B: RationalMatrix) -> bool:
    if A.ncols != B.ncols:
        raise ShapeMismatch(f"{A.ncols} vs {B.ncols} columns")
    ra, pa = _sparse_rref(A.rows, A.ncols)
    rb, pb = _sparse_rref(B.rows, B.ncols)
    return pa == pb and ra == rb
