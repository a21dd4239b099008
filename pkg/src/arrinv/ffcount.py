"""Finite-field complement counting with backend dispatch.

The count of points of F_p^(n+1) lying on none of the hyperplanes is an
independent oracle for the lattice and Mobius computations; see
`invariants.complement_count_prediction` for the lattice-side quantity it
must match.

A compiled kernel is used when the optional extension built; otherwise the
pure-Python backend takes over. Both are exposed so tests and the benchmark
can compare them directly.
"""

from __future__ import annotations

from . import _ffpure
from .arrangement import Arrangement

try:
    from . import _ffkernel
    _HAVE_KERNEL = True
except ImportError:
    _ffkernel = None
    _HAVE_KERNEL = False

# the compiled kernel uses fixed-size C integers; stay well inside them
_KERNEL_MAX_FORMS = 512
_KERNEL_MAX_DIM = 8


class DegenerateReduction(ValueError):
    """A prime under which the arrangement degenerates."""


def kernel_available() -> bool:
    return _HAVE_KERNEL


def backend_name() -> str:
    return "compiled" if _HAVE_KERNEL else "pure"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def count_points_raw(coeffs: list[tuple[int, ...]], p: int,
                     backend: str = "auto") -> int:
    """Count F_p^d points avoiding all forms, no validity checking."""
    if backend not in ("auto", "compiled", "pure"):
        raise ValueError(f"unknown backend {backend!r}")
    reduced = [tuple(c % p for c in f) for f in coeffs]
    m = len(reduced)
    d = len(reduced[0])
    use_kernel = _HAVE_KERNEL and backend != "pure" and \
        m <= _KERNEL_MAX_FORMS and d <= _KERNEL_MAX_DIM
    if backend == "compiled" and not _HAVE_KERNEL:
        raise RuntimeError("compiled kernel is not available")
    if use_kernel or backend == "compiled":
        flat = [c for f in reduced for c in f]
        return _ffkernel.count_nonvanishing(flat, m, d, p)
    return _ffpure.count_nonvanishing(reduced, p)


def _proportional_mod_p(f1: tuple[int, ...], f2: tuple[int, ...], p: int) -> bool:
    d = len(f1)
    for i in range(d):
        for j in range(i + 1, d):
            if (f1[i] * f2[j] - f1[j] * f2[i]) % p != 0:
                return False
    return True


def check_reduction(a: Arrangement, p: int) -> None:
    """Raise DegenerateReduction if two forms become proportional mod p."""
    forms = [f.coeffs for f in a.forms]
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            if _proportional_mod_p(forms[i], forms[j], p):
                raise DegenerateReduction(
                    f"hyperplanes {i + 1} and {j + 1} coincide mod {p}")


def count_complement_points(a: Arrangement, p: int, backend: str = "auto") -> int:
    """Points of F_p^(n+1) on none of the hyperplanes, counted directly."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    check_reduction(a, p)
    return count_points_raw([f.coeffs for f in a.forms], p, backend)


def _rank_mod_p(rows: list[tuple[int, ...]], p: int) -> int:
    work = [[c % p for c in r] for r in rows]
    cols = len(work[0])
    pr = 0
    for c in range(cols):
        sel = None
        for r in range(pr, len(work)):
            if work[r][c] % p:
                sel = r
                break
        if sel is None:
            continue
        work[pr], work[sel] = work[sel], work[pr]
        inv = pow(work[pr][c], p - 2, p)
        work[pr] = [x * inv % p for x in work[pr]]
        for r in range(len(work)):
            if r != pr and work[r][c]:
                g = work[r][c]
                work[r] = [(x - g * y) % p for x, y in zip(work[r], work[pr])]
        pr += 1
    return pr


def prime_preserves_lattice(a: Arrangement, p: int) -> bool:
    """True when every subset of <= n+1 forms keeps its rank mod p.

    Rank preservation of the small subsets forces the whole intersection
    lattice mod p to agree with the lattice over Q, which is exactly what the
    counting identity needs. (A stricter test than the pairwise check in
    count_complement_points.)
    """
    from itertools import combinations

    from .linalg import QMatrix

    forms = [f.coeffs for f in a.forms]
    top = min(a.n + 1, a.m)
    for size in range(1, top + 1):
        for subset in combinations(range(a.m), size):
            rows = [forms[i] for i in subset]
            exact = QMatrix.from_rows(rows, a.n + 1).rank()
            if exact != _rank_mod_p(rows, p):
                return False
    return True


def next_valid_prime(a: Arrangement, start: int) -> int:
    """Smallest lattice-preserving prime >= start."""
    p = max(2, start)
    while True:
        if is_prime(p) and prime_preserves_lattice(a, p):
            return p
        p += 1
