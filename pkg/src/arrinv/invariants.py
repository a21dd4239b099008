"""Numerical invariants of an arrangement and its logarithmic sheaves.

Two sheaves are tracked throughout: the "Steiner log sheaf" (the one
presented by the standard two-term resolution, available once m >= n+2) and
the full log sheaf of rank n (its saturation). Chern polynomials are
truncated at t^(n+1) as usual for sheaves on P^n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arrangement import Arrangement
from .lattice import CrossingClass, IntersectionLattice, classify_crossing
from .truncpoly import TruncPoly


@dataclass(frozen=True)
class PoincareData:
    projective: TruncPoly  # cap n
    central: TruncPoly     # cap n+1


def poincare(lattice: IntersectionLattice) -> PoincareData:
    """Poincare polynomials from the Mobius data.

    projective(t) = sum over flats of mu(x) (-t)^rank(x), and the central
    version adds the degree-(n+1) term so that
    central = projective - projective(-1) * (-t)^(n+1).
    """
    n = lattice.n
    coeffs = [0] * (n + 1)
    for flat, mu in lattice.items():
        coeffs[flat.rank] += mu * ((-1) ** flat.rank)
    projective = TruncPoly.from_coeffs(coeffs, n)
    p_at_minus1 = int(projective.evaluate(-1))
    central_coeffs = coeffs + [((-1) ** n) * p_at_minus1]
    central = TruncPoly.from_coeffs(central_coeffs, n + 1)
    return PoincareData(projective, central)


class LocallyFree(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ChernData:
    """Chern polynomial package, coefficients low degree first, cap n.

    The Steiner fields are None when m < n+2 (no Steiner presentation); the
    reason string says so explicitly.
    """

    steiner_ct: TruncPoly | None
    steiner_twisted_ct: TruncPoly | None
    logfree_twisted_ct: TruncPoly
    n2_c1: int | None
    n2_c2: int | None
    locally_free: LocallyFree
    steiner_unavailable_reason: str | None


def twist_transform(ct: TruncPoly, n: int) -> TruncPoly:
    """Chern polynomial of F(1) from that of F for a rank-n sheaf on P^n.

    sum_i c_i t^i (1+t)^(n-i), computed in the t^(n+1) truncation.
    """
    acc = TruncPoly.from_coeffs([0], n)
    one_plus_t = TruncPoly.one_plus_t(n)
    for i in range(n + 1):
        term = TruncPoly.from_coeffs([0] * i + [ct.coeffs[i]], n)
        acc = acc + term * one_plus_t.pow(n - i)
    return acc


def chern(a: Arrangement, lattice: IntersectionLattice) -> ChernData:
    n, m = a.n, a.m
    pd = poincare(lattice)
    logfree_twisted = pd.projective.divide(TruncPoly.one_plus_t(n))

    steiner_ct = None
    steiner_twisted = None
    reason = None
    if m >= n + 2:
        steiner_ct = TruncPoly.geometric(n).pow(m - 1 - n)
        steiner_twisted = TruncPoly.one_plus_t(n).pow(m - 1)
        # internal consistency: twisting the resolution-side polynomial must
        # reproduce the closed form (1+t)^(m-1)
        if twist_transform(steiner_ct, n) != steiner_twisted:
            raise AssertionError("twist identity failed; truncation bug")
    else:
        reason = f"no Steiner presentation: m = {m} < n + 2 = {n + 2}"

    n2_c1 = n2_c2 = None
    if n == 2:
        n2_c1 = m - 3
        s_sum = sum(f.s - 1 for f in lattice.flats_of_rank(2))
        n2_c2 = s_sum - 2 * m + 3

    crossing = classify_crossing(lattice).kind
    if n <= 2 or crossing is CrossingClass.GENERIC:
        flag = LocallyFree.YES
    elif crossing is CrossingClass.NORMAL_CROSSING_CODIM2_ONLY:
        # normal crossings in codimension 2 without genericity rules out
        # local freeness for n >= 3
        flag = LocallyFree.NO
    else:
        flag = LocallyFree.UNKNOWN

    return ChernData(steiner_ct, steiner_twisted, logfree_twisted,
                     n2_c1, n2_c2, flag, reason)


@dataclass(frozen=True)
class LocalPointData:
    """Curve-singularity numbers of a multiple point of a line arrangement."""

    indices: tuple[int, ...]
    s: int
    milnor: int          # (s-1)^2
    delta_local: int     # s(s-1)/2
    branches: int        # s
    torsion_length: int  # (s-1)(s-2)/2


def local_data(lattice: IntersectionLattice) -> tuple[LocalPointData, ...]:
    """Per-point data for n = 2; each record satisfies mu = 2*delta - r + 1."""
    if lattice.n != 2:
        raise ValueError("local singularity data is defined for n = 2 only")
    out = []
    for f in lattice.flats_of_rank(2):
        s = f.s
        rec = LocalPointData(
            indices=f.indices,
            s=s,
            milnor=(s - 1) ** 2,
            delta_local=comb(s, 2),
            branches=s,
            torsion_length=comb(s - 1, 2),
        )
        if rec.milnor != 2 * rec.delta_local - rec.branches + 1:
            raise AssertionError("Jung-Milnor relation violated")
        out.append(rec)
    return tuple(out)


@dataclass(frozen=True)
class DeltaData:
    total: int
    per_point: tuple[tuple[tuple[int, ...], int], ...]  # (labels, local delta)


def delta_invariant(lattice: IntersectionLattice) -> DeltaData:
    """Sum of C(s(x)-1, 2) over the multiple points of a line arrangement.

    Also checks the pair-count identity C(m,2) - sum(s-1) = sum C(s-1,2),
    which pins the lattice's rank-2 level against pure counting.
    """
    if lattice.n != 2:
        raise ValueError("delta invariant is defined for n = 2 only")
    per = []
    total = 0
    s_sum = 0
    for f in lattice.flats_of_rank(2):
        d = comb(f.s - 1, 2)
        per.append((f.indices, d))
        total += d
        s_sum += f.s - 1
    if comb(lattice.m, 2) - s_sum != total:
        raise AssertionError("pair-count identity violated; lattice bug")
    return DeltaData(total, tuple(per))


def h0_values(lattice: IntersectionLattice) -> tuple[int, int]:
    """Global sections (steiner log sheaf, log sheaf) twisted by 1, n = 2.

    steiner: m - 1.  log sheaf: m - 1 - sum(s-1) + C(m,2).
    """
    if lattice.n != 2:
        raise ValueError("h0 formulas implemented for n = 2 only")
    m = lattice.m
    if m < lattice.n + 2:
        raise ValueError(f"h0 formulas need m >= n + 2, got m = {m}")
    s_sum = sum(f.s - 1 for f in lattice.flats_of_rank(2))
    h0_steiner = m - 1
    h0_log = m - 1 - s_sum + comb(m, 2)
    return h0_steiner, h0_log


def complement_count_prediction(lattice: IntersectionLattice, p: int) -> int:
    """Lattice-side value the finite-field count must equal.

    p^(n+1) * central(-1/p) expanded exactly: the central Poincare polynomial
    carries the full central intersection data, including the origin flat of
    an essential arrangement that the projective lattice omits.
    """
    n = lattice.n
    central = poincare(lattice).central
    acc = 0
    for i, c in enumerate(central.coeffs):
        acc += c * ((-1) ** i) * p ** (n + 1 - i)
    return acc
