"""Small exact lattice tools: integer kernels and rank-2 Gauss reduction."""

from __future__ import annotations

import math
from typing import Sequence


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s a + t b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def kernel_basis_3(row: Sequence[int]) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """A Z-basis of {v in Z^3 : row . v = 0} for a nonzero integer row.

    With g = gcd(a, b), s a + t b = g and h = gcd(g, c) the basis is
    (b/g, -a/g, 0) and (s c/h, t c/h, -g/h).
    """
    a, b, c = row
    if a == b == 0:
        if c == 0:
            raise ValueError("zero row")
        return (1, 0, 0), (0, 1, 0)
    g, s, t = ext_gcd(a, b)
    h = math.gcd(g, c)
    return (b // g, -a // g, 0), (s * (c // h), t * (c // h), -(g // h))


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def norm2(v: Sequence[int]) -> int:
    return sum(x * x for x in v)


def gauss_reduce(u: Sequence[int], v: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lagrange-Gauss reduction of a rank-2 integer lattice basis.

    Returns (u, v) with |u| <= |v| and |2 u.v| <= |u|^2.
    """
    u, v = tuple(u), tuple(v)
    if norm2(u) > norm2(v):
        u, v = v, u
    while True:
        nu = norm2(u)
        if nu == 0:
            raise ValueError("dependent basis")
        d = _dot(u, v)
        # nearest integer to d / nu, ties toward zero
        q = (2 * d + nu) // (2 * nu) if d >= 0 else -((-2 * d + nu) // (2 * nu))
        v = tuple(y - q * x for x, y in zip(u, v))
        if norm2(v) >= nu:
            return u, v
        u, v = v, u
