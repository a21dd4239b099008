"""Exact linear algebra over the rationals.

All computations use `fractions.Fraction`; nothing here ever rounds. The
canonical forms fixed in this module are relied on across the package:

* `rref` produces the unique reduced row echelon form (pivots 1, zeros above
  and below each pivot).
* `kernel_basis` derives a null-space basis from the RREF by setting one free
  variable to 1 and the others to 0, free columns in increasing order. This
  makes downstream constructions (relation spaces, dual configurations)
  reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Q = Fraction


def qval(x) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' string to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational value: {x!r}")


@dataclass(frozen=True)
class QMatrix:
    """Immutable rational matrix, row major.

    `cols` is stored explicitly so zero-row matrices (empty kernels and the
    like) keep their shape.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    cols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "QMatrix":
        data = tuple(tuple(qval(x) for x in row) for row in rows)
        if cols is None:
            if not data:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        return cls(data, cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "QMatrix":
        return QMatrix(tuple(self.column(j) for j in range(self.cols)), self.rows)

    def stack(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in stack")
        return QMatrix(self.entries + other.entries, self.cols)

    def rank(self) -> int:
        return rref(self)[2]

    def matvec(self, v: Sequence) -> tuple[Fraction, ...]:
        vv = [qval(x) for x in v]
        if len(vv) != self.cols:
            raise ValueError("dimension mismatch in matvec")
        return tuple(sum((r[j] * vv[j] for j in range(self.cols)), Q(0))
                     for r in self.entries)


def rref(m: QMatrix) -> tuple[QMatrix, tuple[int, ...], int]:
    """Reduced row echelon form. Returns (R, pivot columns, rank)."""
    work = [list(row) for row in m.entries]
    nrows, ncols = len(work), m.cols
    pivots: list[int] = []
    pr = 0
    for c in range(ncols):
        sel = None
        for r in range(pr, nrows):
            if work[r][c] != 0:
                sel = r
                break
        if sel is None:
            continue
        work[pr], work[sel] = work[sel], work[pr]
        inv = work[pr][c]
        work[pr] = [x / inv for x in work[pr]]
        for r in range(nrows):
            if r != pr and work[r][c] != 0:
                f = work[r][c]
                work[r] = [a - f * b for a, b in zip(work[r], work[pr])]
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    reduced = QMatrix(tuple(tuple(row) for row in work), ncols)
    return reduced, tuple(pivots), len(pivots)


def kernel_basis(m: QMatrix) -> QMatrix:
    """Canonical basis of the right null space, one row per free column."""
    reduced, pivots, _ = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * m.cols
        v[f] = Q(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced.entries[r][f]
        basis.append(tuple(v))
    return QMatrix(tuple(basis), m.cols)


def det(m: QMatrix) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    work = [list(row) for row in m.entries]
    n = m.rows
    sign = 1
    result = Q(1)
    for c in range(n):
        sel = None
        for r in range(c, n):
            if work[r][c] != 0:
                sel = r
                break
        if sel is None:
            return Q(0)
        if sel != c:
            work[c], work[sel] = work[sel], work[c]
            sign = -sign
        pivot = work[c][c]
        result *= pivot
        for r in range(c + 1, n):
            if work[r][c] != 0:
                f = work[r][c] / pivot
                work[r] = [a - f * b for a, b in zip(work[r], work[c])]
    return result * sign


def solve_square(a: QMatrix, b: Sequence) -> tuple[Fraction, ...]:
    """Solve a x = b for invertible square a."""
    if a.rows != a.cols:
        raise ValueError("solve_square needs a square matrix")
    aug = QMatrix.from_rows(
        [list(row) + [qval(b[i])] for i, row in enumerate(a.entries)], a.cols + 1)
    reduced, pivots, rank = rref(aug)
    if rank != a.rows or a.cols in pivots:
        raise ValueError("singular system")
    return tuple(reduced.entries[r][a.cols] for r in range(a.rows))


def invert(a: QMatrix) -> QMatrix:
    """Inverse of a square invertible matrix."""
    if a.rows != a.cols:
        raise ValueError("inverse of a non-square matrix")
    n = a.rows
    aug = QMatrix.from_rows(
        [list(row) + [Q(1) if i == j else Q(0) for j in range(n)]
         for i, row in enumerate(a.entries)], 2 * n)
    reduced, pivots, rank = rref(aug)
    if rank != n or pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return QMatrix(tuple(row[n:] for row in reduced.entries), n)


def intersection_dim(a: QMatrix, b: QMatrix) -> int:
    """Dimension of the intersection of two row spans in the same ambient."""
    if a.cols != b.cols:
        raise ValueError("ambient mismatch")
    ra, rb = a.rank(), b.rank()
    return ra + rb - a.stack(b).rank()


def primitive_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero > 0."""
    vals = [qval(x) for x in v]
    if all(x == 0 for x in vals):
        raise ValueError("zero vector has no primitive form")
    denom = 1
    for x in vals:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vals]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)
