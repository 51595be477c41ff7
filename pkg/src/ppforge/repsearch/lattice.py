"""Exact structure of 4-term representations.

For odd k let sigma = +1 when k = 1 mod 4 and -1 when k = 3 mod 4, and
h = (k + 1) / 2.  The Gamma(3/4) parts of S(k, 1) and S(k, 4) cancel in

    V_k = S(k, 1) + sigma 4^h S(k, 4) = (1 + sigma 4^h) B_(k+1) / (2 (k+1)),

so every relation e P + a S(k1,1) + b S(k1,4) + c S(k2,1) + d S(k2,4) = 0
of this paired shape is an integer point (e, alpha, beta) of the plane
e P + alpha V_k1 + beta V_k2 = 0.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..kernel.sequences import bernoulli
from ..relation.lattice import gauss_reduce, kernel_basis_3, norm2

Vector = tuple[int, int, int, int, int]


def sigma(k: int) -> int:
    if k < 3 or k % 2 == 0:
        raise ValueError("k must be odd and >= 3")
    return 1 if k % 4 == 1 else -1


def partner(k: int) -> int:
    """Multiplier of S(k, 4) relative to S(k, 1) in the cancelling pair."""
    return sigma(k) * 4 ** ((k + 1) // 2)


@lru_cache(maxsize=None)
def pair_value(k: int) -> Fraction:
    """V_k = S(k, 1) + partner(k) S(k, 4), an exact rational."""
    return (1 + partner(k)) * bernoulli(k + 1) / (2 * (k + 1))


def embed(w, k1: int, k2: int) -> Vector:
    e, alpha, beta = w
    return (e, alpha, alpha * partner(k1), beta, beta * partner(k2))


def in_lattice(vec, P: int, k1: int, k2: int) -> bool:
    """True when ``vec`` has the paired shape and satisfies the exact relation."""
    e, a, b, c, d = vec
    if b != a * partner(k1) or d != c * partner(k2):
        return False
    return e * P + a * pair_value(k1) + c * pair_value(k2) == 0


def reduced_basis(P: int, k1: int, k2: int) -> tuple[Vector, Vector]:
    """Gauss-reduced basis of all paired relations for (P, k1, k2)."""
    v1, v2 = pair_value(k1), pair_value(k2)
    den = math.lcm(v1.denominator, v2.denominator)
    row = (P * den, int(v1 * den), int(v2 * den))
    u, w = kernel_basis_3(row)
    return gauss_reduce(embed(u, k1, k2), embed(w, k1, k2))


def _qualifies(v) -> bool:
    return abs(v[0]) == 1 and all(v[1:])


def canonical_vector(P: int, k1: int, k2: int) -> Vector | None:
    """The representation vector in the appendix normalization, or None.

    Among relations with |e| = 1 and a, b, c, d all nonzero: if both
    reduced basis vectors qualify and are of comparable length
    (4 |u|^2 >= 3 |v|^2) the one with smaller |c| wins (then the shorter);
    else the first qualifying basis vector; else the shorter qualifying
    u + v or u - v.  The result is scaled to e = -1.
    """
    if P < 2:
        raise ValueError("P must be >= 2")
    if not 3 <= k1 < k2:
        raise ValueError("need 3 <= k1 < k2")
    u, v = reduced_basis(P, k1, k2)
    pick = None
    if _qualifies(u) and _qualifies(v) and 4 * norm2(u) >= 3 * norm2(v):
        pick = min((u, v), key=lambda x: (abs(x[3]), norm2(x)))
    else:
        for x in (u, v):
            if _qualifies(x):
                pick = x
                break
    if pick is None:
        combos = [tuple(a + s * b for a, b in zip(u, v)) for s in (1, -1)]
        combos = [x for x in combos if _qualifies(x)]
        if combos:
            pick = min(combos, key=norm2)
    if pick is None:
        return None
    if pick[0] > 0:
        pick = tuple(-x for x in pick)
    return pick
