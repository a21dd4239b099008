"""Pure-Python backend for point counting over prime fields.

Semantics match the compiled kernel: count vectors of F_p^d on which none of
the given forms vanish. Instead of visiting all p^d points it walks the p^(d-1)
fibers over the last coordinate and, within a fiber, counts the union of the
single roots each form contributes. That keeps the fallback usable at the
largest sizes the package supports.
"""

from __future__ import annotations

from itertools import product


def count_nonvanishing(coeffs: list[tuple[int, ...]], p: int) -> int:
    m = len(coeffs)
    if m == 0:
        raise ValueError("no forms")
    d = len(coeffs[0])
    inv = [0] * p  # inverse table; inv[0] unused
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    last = [f[d - 1] % p for f in coeffs]
    heads = [tuple(c % p for c in f[: d - 1]) for f in coeffs]
    count = 0
    for prefix in product(range(p), repeat=d - 1):
        roots = set()
        dead = False
        for i in range(m):
            head = heads[i]
            s = 0
            for c, v in zip(head, prefix):
                s += c * v
            s %= p
            a = last[i]
            if a == 0:
                if s == 0:
                    dead = True  # the form vanishes on the whole fiber
                    break
            else:
                roots.add((-s * inv[a]) % p)
        if not dead:
            count += p - len(roots)
    return count
