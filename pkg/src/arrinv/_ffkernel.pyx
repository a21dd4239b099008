# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled point counting over small prime fields.

Counts vectors in F_p^d on which none of m linear forms vanish. The walk
fixes the first d-1 coordinates and handles the last coordinate in O(m):
on such a fiber each form is either constant or has exactly one root, so
the fiber contributes p minus the number of distinct roots (or nothing if
some form vanishes identically on it). Partial sums are carried down the
recursion, and distinct roots are tracked with a generation-stamped table
so nothing is cleared between fibers.
"""

from libc.stdlib cimport calloc, free, malloc


cdef long _scan(int lvl, int d, int m, int p, const long* coeffs,
                long* part, const long* inv, long* stamp, long* gen) nogil:
    cdef long cnt = 0
    cdef int i, t
    cdef long c, s, root, distinct
    if lvl == d - 1:
        gen[0] += 1
        distinct = 0
        for i in range(m):
            c = coeffs[i * d + lvl]
            s = part[lvl * m + i]
            if c == 0:
                if s == 0:
                    return 0  # the form vanishes on the whole fiber
            else:
                root = ((p - s) * inv[c]) % p
                if stamp[root] != gen[0]:
                    stamp[root] = gen[0]
                    distinct += 1
        return p - distinct
    for t in range(p):
        for i in range(m):
            c = part[lvl * m + i] + coeffs[i * d + lvl] * t
            part[(lvl + 1) * m + i] = c % p
        cnt += _scan(lvl + 1, d, m, p, coeffs, part, inv, stamp, gen)
    return cnt


def count_nonvanishing(coeffs_flat, int m, int d, int p):
    """Count points of F_p^d avoiding all m forms.

    coeffs_flat: row-major m*d residues already reduced into [0, p).
    """
    if m <= 0 or d <= 0 or p <= 1:
        raise ValueError("bad dimensions for counting kernel")
    if len(coeffs_flat) != m * d:
        raise ValueError("coefficient buffer has wrong length")
    cdef long* coeffs = <long*> malloc(m * d * sizeof(long))
    cdef long* part = <long*> malloc((d + 1) * m * sizeof(long))
    cdef long* inv = <long*> malloc(p * sizeof(long))
    cdef long* stamp = <long*> calloc(p, sizeof(long))
    cdef long gen = 0
    if coeffs == NULL or part == NULL or inv == NULL or stamp == NULL:
        free(coeffs); free(part); free(inv); free(stamp)
        raise MemoryError()
    cdef int i
    cdef long a, total
    try:
        for i in range(m * d):
            coeffs[i] = coeffs_flat[i] % p
        for i in range(m):
            part[i] = 0
        with nogil:
            inv[0] = 0
            if p > 1:
                inv[1] = 1
            for a in range(2, p):
                inv[a] = ((p - (p // a)) * inv[p % a]) % p
            total = _scan(0, d, m, p, coeffs, part, inv, stamp, &gen)
        return total
    finally:
        free(coeffs)
        free(part)
        free(inv)
        free(stamp)
