"""Exact Bernoulli, secant (Euler) and zigzag numbers.

The zigzag triangle is the workhorse: even entries are the secant numbers
E_n, odd entries the tangent numbers T_n, and B_2m follows from T_(2m-1).
Large Bernoulli indices go through the zeta function instead: the
denominator is fixed by von Staudt-Clausen and the numerator is the nearest
integer to B_2m times that denominator.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

import mpmath

from .._backend import kernels
from .numeric import GUARD_DIGITS

# indices at or above this use the zeta route
ZETA_ROUTE_MIN = 300


class SequenceCache:
    """Write-once store of exact sequence values.

    Racing fills are harmless: two threads computing the same index store
    the same value.  The lock only guards growing the zigzag prefix.
    """

    def __init__(self):
        self._zigzag: list[int] = [1]
        self._bernoulli: dict[int, Fraction] = {}
        self._lock = threading.Lock()

    @property
    def secant(self) -> dict[int, int]:
        return {n: v for n, v in enumerate(self._zigzag) if n % 2 == 0}

    @property
    def zigzag(self) -> dict[int, int]:
        return dict(enumerate(self._zigzag))

    @property
    def bernoulli(self) -> dict[int, Fraction]:
        return dict(self._bernoulli)

    def zigzag_upto(self, n: int) -> list[int]:
        if n >= len(self._zigzag):
            with self._lock:
                if n >= len(self._zigzag):
                    # double to amortise the quadratic rebuild
                    target = max(n, 2 * len(self._zigzag))
                    self._zigzag = kernels.seidel_zigzag(target)
        return self._zigzag

    def store_bernoulli(self, n: int, value: Fraction) -> Fraction:
        return self._bernoulli.setdefault(n, value)


CACHE = SequenceCache()


def zigzag(n: int) -> int:
    """Number of alternating permutations of n letters (A000111)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return CACHE.zigzag_upto(n)[n]


def euler_secant(n2: int) -> int:
    """Secant number E_n2 = n2! [x^n2] 1/cos(x), all positive."""
    if n2 < 0 or n2 % 2:
        raise ValueError("secant numbers are defined here for even n >= 0 only")
    return zigzag(n2)


def tangent(n: int) -> int:
    """Tangent number T_n = n! [x^n] tan(x) for odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("tangent numbers are defined here for odd n >= 1 only")
    return zigzag(n)


def von_staudt_denominator(n2: int) -> int:
    """Product of primes p with (p - 1) | n2, the exact denominator of B_n2."""
    if n2 < 2 or n2 % 2:
        raise ValueError("n2 must be even and >= 2")
    den = 1
    for d in _divisors(n2):
        p = d + 1
        if _is_small_prime(p):
            den *= p
    return den


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
    return sorted(out)


def _is_small_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % f for f in range(3, math.isqrt(p) + 1, 2))


def bernoulli_from_tangent(n: int) -> Fraction:
    """B_n for even n >= 2 from B_2m = (-1)^(m-1) 2m T_(2m-1) / (4^m (4^m - 1))."""
    m = n // 2
    num = 2 * m * tangent(2 * m - 1)
    if m % 2 == 0:
        num = -num
    return Fraction(num, 4**m * (4**m - 1))


def bernoulli_via_zeta(n: int) -> Fraction:
    """B_n for even n >= 2 from zeta(n) and the von Staudt-Clausen denominator."""
    den = von_staudt_denominator(n)
    # log10 |B_n| ~ log10(2 n! / (2 pi)^n)
    mag = (math.lgamma(n + 1) + math.log(2) - n * math.log(2 * math.pi)) / math.log(10)
    digits = int(mag + math.log10(den)) + 2 * GUARD_DIGITS
    with mpmath.workdps(digits):
        b = 2 * mpmath.factorial(n) * mpmath.zeta(n) / (2 * mpmath.pi) ** n
        scaled = b * den
        num = int(mpmath.nint(scaled))
        if abs(scaled - num) > mpmath.mpf("0.01"):
            raise ArithmeticError(f"B_{n}: numerator not resolved at {digits} digits")
    if n % 4 == 0:
        num = -num
    return Fraction(num, den)


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """B_n by the Akiyama-Tanigawa triangle (an independent O(n^2) check)."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    # the triangle yields B_1 = +1/2
    return -a[0] if n == 1 else a[0]


def bernoulli(n: int) -> Fraction:
    """Exact B_n with the B_1 = -1/2 convention."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    cached = CACHE._bernoulli.get(n)
    if cached is not None:
        return cached
    if n >= ZETA_ROUTE_MIN:
        value = bernoulli_via_zeta(n)
    else:
        value = bernoulli_from_tangent(n)
    if value.denominator != von_staudt_denominator(n):
        raise ArithmeticError(f"B_{n} fails the von Staudt-Clausen check")
    return CACHE.store_bernoulli(n, value)


def zeta_even_rational(m2: int) -> Fraction:
    """Z with zeta(m2) = Z * pi^m2 for even m2 >= 2."""
    if m2 < 2 or m2 % 2:
        raise ValueError("m2 must be even and >= 2")
    z = bernoulli(m2) * 2**m2 / (2 * math.factorial(m2))
    return z if (m2 // 2) % 2 == 1 else -z
