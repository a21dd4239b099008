"""Slope-stability analysis of the logarithmic sheaf.

Four independent tests feed a single classifier:

* a combinatorial flat test: a flat of rank r on s hyperplanes destabilizes
  when s is too large against the threshold (m-1)(r-1)/n + 1 (strict excess
  means unstable, equality rules out stability);
* the n=2 discriminant test 4*sum(s-1) - (m-1)(m+3) < 0, which is
  4c2 - c1^2 < 0 for the n=2 Chern numbers;
* a GIT test on the defining tensor: a subspace W' of the sum-zero space
  destabilizes when dim(E meet W'xV*) / dim W' exceeds dim E / dim W;
* a splitting test for arrangements known to be free with given exponents.

The classifier never guesses: when no implemented criterion decides, it
returns Undetermined with the evidence that was gathered.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement
from .lattice import CrossingClass, Flat, IntersectionLattice, classify_crossing
from .steiner import SteinerTensor
from .linalg import QMatrix


class Status(enum.Enum):
    UNSTABLE = "unstable"
    NOT_STABLE = "not_stable"        # semi-stable at best
    STABLE = "stable"
    UNDETERMINED = "undetermined"


class WitnessKind(enum.Enum):
    FLAT_RATIO = "flat_ratio"
    DISCRIMINANT = "discriminant"
    GIT_SUBSPACE = "git_subspace"
    SPLITTING = "splitting"


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    lhs: Fraction
    rhs: Fraction
    strict: bool
    flat_indices: tuple[int, ...] | None = None
    detail: str = ""


@dataclass(frozen=True)
class StabilityVerdict:
    status: Status
    witnesses: tuple[Witness, ...]
    rules: tuple[str, ...]  # rule trail with provenance notes


def combinatorial_destabilizer(lattice: IntersectionLattice) -> Witness | None:
    """Scan flats of rank >= 2 against the threshold (m-1)(r-1)/n + 1.

    Returns a strict witness if one exists, otherwise an equality witness,
    otherwise None. Flats are scanned in lattice order, so the reported
    witness is deterministic.
    """
    m, n = lattice.m, lattice.n
    equality = None
    for f in lattice.flats:
        if f.rank < 2:
            continue
        bound = Fraction((m - 1) * (f.rank - 1), n) + 1
        s = Fraction(f.s)
        if s > bound:
            return Witness(WitnessKind.FLAT_RATIO, s, bound, True, f.indices,
                           f"flat on {f.s} hyperplanes exceeds the rank-{f.rank} threshold")
        if s == bound and equality is None:
            equality = Witness(WitnessKind.FLAT_RATIO, s, bound, False, f.indices,
                               f"flat on {f.s} hyperplanes meets the rank-{f.rank} threshold exactly")
    return equality


def discriminant_test(lattice: IntersectionLattice) -> tuple[Fraction, Witness | None]:
    """n=2 only: value 4*sum(s-1) - (m-1)(m+3); negative means unstable."""
    if lattice.n != 2:
        raise ValueError("discriminant test is defined for n = 2 only")
    m = lattice.m
    if m < 4:
        raise ValueError("discriminant test needs m >= 4")
    s_sum = sum(f.s - 1 for f in lattice.flats_of_rank(2))
    value = Fraction(4 * s_sum - (m - 1) * (m + 3))
    if value < 0:
        return value, Witness(WitnessKind.DISCRIMINANT, value, Fraction(0), True,
                              None, "negative discriminant forces a destabilizing subsheaf")
    return value, None


@dataclass(frozen=True)
class GitRatioResult:
    dim_e: int
    dim_w: int
    dim_wprime: int
    dim_intersection: int
    lhs: Fraction  # dim(E meet W'xV*) / dim W'
    rhs: Fraction  # dim E / dim W
    destabilizing: bool      # lhs > rhs
    strict_ok: bool          # lhs < rhs
    semistable_ok: bool      # lhs <= rhs


def _tensor_image_vectors(t: SteinerTensor) -> QMatrix:
    """Flattened images of the basis relations inside V* tensor W."""
    amb = (t.n + 1) * (t.m - 1)
    rows = []
    for j in range(t.m - t.n - 1):
        vec = []
        for k in range(t.n + 1):
            vec.extend(t.slices[k].entries[r][j] for r in range(t.m - 1))
        rows.append(tuple(vec))
    return QMatrix(tuple(rows), amb)


def git_ratio_test(t: SteinerTensor, w_prime: QMatrix) -> GitRatioResult:
    """Compare the concentration of the tensor image over W' with its slope.

    w_prime: basis rows of a subspace of W, written in the m-1 coordinates of
    the fixed basis e_i - e_m. Must be a proper nonzero subspace.
    """
    if w_prime.cols != t.m - 1:
        raise ValueError("W' rows must have m-1 coordinates")
    dim_wprime = w_prime.rank()
    if dim_wprime == 0 or dim_wprime >= t.m - 1:
        raise ValueError("W' must be a proper nonzero subspace of W")
    e = _tensor_image_vectors(t)
    dim_e = e.rank()
    amb = (t.n + 1) * (t.m - 1)
    f_rows = []
    for k in range(t.n + 1):
        for row in w_prime.entries:
            vec = [Fraction(0)] * amb
            for r in range(t.m - 1):
                vec[k * (t.m - 1) + r] = row[r]
            f_rows.append(tuple(vec))
    f = QMatrix(tuple(f_rows), amb)
    dim_f = f.rank()
    dim_int = dim_e + dim_f - e.stack(f).rank()
    lhs = Fraction(dim_int, dim_wprime)
    rhs = Fraction(dim_e, t.m - 1)
    return GitRatioResult(dim_e, t.m - 1, dim_wprime, dim_int, lhs, rhs,
                          lhs > rhs, lhs < rhs, lhs <= rhs)


def flat_subspace(flat: Flat, m: int) -> QMatrix:
    """The destabilizing candidate W' induced by a flat.

    Sum-zero vectors supported on the flat's hyperplanes, dimension s-1,
    returned in the m-1 coordinates of the basis e_i - e_m.
    """
    labels = flat.indices
    if len(labels) < 2:
        raise ValueError("flat must lie on at least two hyperplanes")
    rows = []
    for a, b in zip(labels, labels[1:]):
        # e_a - e_b is sum-zero; in the e_i - e_m coordinates its entries are
        # simply the first m-1 components
        y = [Fraction(0)] * m
        y[a - 1] = Fraction(1)
        y[b - 1] += Fraction(-1)
        rows.append(tuple(y[: m - 1]))
    return QMatrix(tuple(rows), m - 1)


def free_splitting_stability(exponents: list[int]) -> StabilityVerdict:
    """Stability of a direct sum of line bundles with the given exponents."""
    if not exponents:
        raise ValueError("empty exponent list")
    if len(exponents) == 1:
        return StabilityVerdict(Status.STABLE, (),
                                ("splitting: a line bundle is stable",))
    lo, hi = min(exponents), max(exponents)
    mean = Fraction(sum(exponents), len(exponents))
    if lo != hi:
        w = Witness(WitnessKind.SPLITTING, Fraction(hi), mean, True, None,
                    f"summand of slope {hi} exceeds the mean slope {mean}")
        return StabilityVerdict(Status.UNSTABLE, (w,),
                                ("splitting: unequal exponents destabilize",))
    w = Witness(WitnessKind.SPLITTING, Fraction(hi), mean, False, None,
                "equal-slope summands make a strictly semi-stable sum")
    return StabilityVerdict(Status.NOT_STABLE, (w,),
                            ("splitting: equal exponents, semi-stable but not stable",))


def classify(a: Arrangement, lattice: IntersectionLattice,
             tensor: SteinerTensor | None = None,
             literature_rules: bool = True) -> StabilityVerdict:
    """Combine the implemented tests into one verdict.

    Order: destabilizing witnesses first (combinatorial, then the n=2
    discriminant), then stability via the literature rules (generic
    arrangements; n=2 single-triple-point arrangements with m >= 6), then the
    parity upgrade for n=2 and even m, else Undetermined.
    """
    m, n = a.m, a.n
    if m < n + 2:
        raise ValueError(f"stability analysis needs m >= n + 2, got m = {m}")
    witnesses: list[Witness] = []
    rules: list[str] = []

    comb_wit = combinatorial_destabilizer(lattice)
    if comb_wit is not None:
        witnesses.append(comb_wit)
        rules.append("flat-ratio: strict excess" if comb_wit.strict
                     else "flat-ratio: equality")
        if comb_wit.strict:
            return StabilityVerdict(Status.UNSTABLE, tuple(witnesses), tuple(rules))

    if n == 2 and m >= 4:
        value, disc_wit = discriminant_test(lattice)
        if disc_wit is not None:
            witnesses.append(disc_wit)
            rules.append(f"discriminant: {value} < 0")
            return StabilityVerdict(Status.UNSTABLE, tuple(witnesses), tuple(rules))
        rules.append(f"discriminant: {value} >= 0, inconclusive")

    if comb_wit is not None:
        # equality witness survived the unstable checks
        status = Status.NOT_STABLE
        if n == 2 and m % 2 == 0:
            # even m makes c1 = m-3 odd and gcd(c1, 2) = 1, so semi-stable
            # would imply stable; "not stable" then forces unstable
            rules.append("parity upgrade: coprime slope excludes strict semi-stability")
            status = Status.UNSTABLE
        return StabilityVerdict(status, tuple(witnesses), tuple(rules))

    if literature_rules:
        if classify_crossing(lattice).kind is CrossingClass.GENERIC:
            rules.append("generic arrangements give stable Steiner bundles "
                         "(Bohnhorst-Spindler)")
            return StabilityVerdict(Status.STABLE, tuple(witnesses), tuple(rules))
        if n == 2 and m >= 6:
            from .invariants import delta_invariant
            if delta_invariant(lattice).total == 1:
                rules.append("single modest multiple point (delta = 1, m >= 6) "
                             "is stable (Schenck)")
                return StabilityVerdict(Status.STABLE, tuple(witnesses), tuple(rules))

    rules.append("no implemented criterion decides; verdict left open")
    return StabilityVerdict(Status.UNDETERMINED, tuple(witnesses), tuple(rules))
