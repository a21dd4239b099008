"""Defining tensor of an arrangement and Gale duality.

For an essential arrangement of m >= n+2 hyperplanes the relation space U of
the coefficient matrix has dimension m-n-1. The defining tensor sends a
relation a and a point v to the vector (a_1 f_1(v), ..., a_m f_m(v)), which
always sums to zero and therefore lands in the sum-zero subspace W of k^m.
Slicing the tensor along the coordinate directions of v produces n+1
matrices in the fixed bases of U and W; those slices determine the sheaf
presentation and everything the stability analysis needs.

The Gale dual arrangement reads the columns of the canonical relation basis
as m forms in m-n-1 variables. Dependent subsets of maximal size swap with
their complements under this duality; `verify_gale_bijection` checks that at
the level of coordinate configurations, so it also covers duals whose points
collide (which cannot be represented as an Arrangement).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement, InvalidArrangement, is_essential, parse_arrangement
from .lattice import CrossingClass, IntersectionLattice, classify_crossing
from .linalg import QMatrix, det, kernel_basis


class GaleUndefined(ValueError):
    """The Gale dual does not exist as an arrangement of distinct hyperplanes."""


@dataclass(frozen=True)
class SteinerTensor:
    m: int
    n: int
    u_basis: QMatrix                  # (m-n-1) x m, canonical kernel basis
    w_basis: QMatrix                  # (m-1) x m, rows e_i - e_m
    slices: tuple[QMatrix, ...]       # n+1 matrices, each (m-1) x (m-n-1)


def _w_coordinates(y: list[Fraction]) -> tuple[Fraction, ...]:
    """Coordinates of a sum-zero vector of k^m in the basis e_i - e_m."""
    assert sum(y) == 0
    return tuple(y[:-1])


def steiner_tensor(a: Arrangement) -> SteinerTensor:
    m, n = a.m, a.n
    if m < n + 2:
        raise ValueError(f"defining tensor needs m >= n + 2, got m = {m}")
    if not is_essential(a):
        raise ValueError("defining tensor needs an essential arrangement")
    u = kernel_basis(a.coefficient_matrix())
    assert u.rows == m - n - 1
    w_rows = []
    for i in range(m - 1):
        row = [Fraction(0)] * m
        row[i] = Fraction(1)
        row[m - 1] = Fraction(-1)
        w_rows.append(tuple(row))
    w = QMatrix(tuple(w_rows), m)
    slices = []
    for k in range(n + 1):
        cols = []
        for j in range(u.rows):
            rel = u.entries[j]
            y = [rel[i] * a.forms[i].coeffs[k] for i in range(m)]
            cols.append(_w_coordinates(y))
        # cols[j] is the image of basis relation j; transpose into a matrix
        # with one column per relation
        slice_rows = tuple(tuple(cols[j][r] for j in range(u.rows))
                           for r in range(m - 1))
        slices.append(QMatrix(slice_rows, u.rows))
    return SteinerTensor(m, n, u, w, tuple(slices))


def slice_at_point(t: SteinerTensor, point) -> QMatrix:
    """The (m-1) x (m-n-1) matrix of the tensor contracted with a point."""
    from .linalg import qval
    if len(point) != t.n + 1:
        raise ValueError("point has wrong dimension")
    rows = []
    for r in range(t.m - 1):
        rows.append(tuple(
            sum((qval(point[k]) * t.slices[k].entries[r][j]
                 for k in range(t.n + 1)), Fraction(0))
            for j in range(t.m - t.n - 1)))
    return QMatrix(tuple(rows), t.m - t.n - 1)


def dual_columns(a: Arrangement) -> list[tuple[Fraction, ...]]:
    """Columns of the canonical relation basis, one per hyperplane."""
    u = kernel_basis(a.coefficient_matrix())
    return [tuple(u.entries[j][i] for j in range(u.rows)) for i in range(a.m)]


def gale_dual(a: Arrangement) -> Arrangement:
    """The dual arrangement of m hyperplanes in P^(m-n-2).

    Requires m >= n+3 (so the dual ambient space is at least a line), an
    essential arrangement, and a dual configuration that actually consists
    of m distinct nonzero forms.
    """
    m, n = a.m, a.n
    if m < n + 3:
        raise GaleUndefined(
            f"dual ambient space P^{m - n - 2} is not a projective space "
            f"(need m >= n + 3, got m = {m})")
    if not is_essential(a):
        raise GaleUndefined("Gale dual needs an essential arrangement")
    cols = dual_columns(a)
    for i, c in enumerate(cols, start=1):
        if all(x == 0 for x in c):
            raise GaleUndefined(
                f"hyperplane {i} appears in no relation; its dual form is zero")
    try:
        return parse_arrangement(m - n - 2, [list(c) for c in cols])
    except InvalidArrangement as exc:
        raise GaleUndefined(f"dual points collide: {exc}") from exc


@dataclass(frozen=True)
class DependentSets:
    size: int
    sets: tuple[tuple[int, ...], ...]  # sorted labels, lexicographic order


def _dependent_subsets(vectors, dim: int) -> tuple[tuple[int, ...], ...]:
    """Index subsets of size dim whose vectors have a vanishing determinant."""
    out = []
    for subset in combinations(range(len(vectors)), dim):
        mat = QMatrix.from_rows([vectors[i] for i in subset], dim)
        if det(mat) == 0:
            out.append(tuple(i + 1 for i in subset))
    return tuple(out)


def dependent_sets(a: Arrangement) -> DependentSets:
    """All (n+1)-subsets of hyperplanes whose forms are linearly dependent."""
    size = a.n + 1
    if a.m < size:
        return DependentSets(size, ())
    return DependentSets(size, _dependent_subsets([f.coeffs for f in a.forms], size))


@dataclass(frozen=True)
class GaleBijectionReport:
    ok: bool
    primal_dependent: tuple[tuple[int, ...], ...]
    expected_dual: tuple[tuple[int, ...], ...]   # complements of the primal sets
    actual_dual: tuple[tuple[int, ...], ...]
    missing: tuple[tuple[int, ...], ...]
    extra: tuple[tuple[int, ...], ...]


def verify_gale_bijection(a: Arrangement) -> GaleBijectionReport:
    """Check that dual dependent sets are exactly complements of primal ones.

    Works on the raw dual configuration, so coincident dual points are fine.
    """
    m, n = a.m, a.n
    if m < n + 3:
        raise GaleUndefined(f"need m >= n + 3, got m = {m}")
    if not is_essential(a):
        raise GaleUndefined("Gale duality needs an essential arrangement")
    primal = dependent_sets(a).sets
    cols = dual_columns(a)
    dual_size = m - n - 1
    actual = _dependent_subsets(cols, dual_size)
    full = set(range(1, m + 1))
    expected = tuple(sorted(tuple(sorted(full - set(s))) for s in primal))
    missing = tuple(s for s in expected if s not in set(actual))
    extra = tuple(s for s in actual if s not in set(expected))
    return GaleBijectionReport(
        ok=not missing and not extra,
        primal_dependent=primal,
        expected_dual=expected,
        actual_dual=actual,
        missing=missing,
        extra=extra,
    )


def nondegenerate(a: Arrangement, lattice: IntersectionLattice) -> bool:
    """Whether the defining tensor is nondegenerate.

    Equivalent to the arrangement being generic; the combinatorial test is
    used directly.
    """
    if a.m < a.n + 2:
        raise ValueError(f"nondegeneracy needs m >= n + 2, got m = {a.m}")
    return classify_crossing(lattice).kind is CrossingClass.GENERIC
