"""Probable-prime testing (Baillie-PSW style) and small factorisation."""

from __future__ import annotations

import math

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# strong-pseudoprime bases, deterministic below 3.3e24 on their own
MR_BASES = SMALL_PRIMES


def _strong_probable_prime(n: int, a: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P = 1
    Q = (1 - D) // 4
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # binary Lucas chain for U_d, V_d
    U, V, Qk = 1, P, Q % n
    inv2 = (n + 1) // 2
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_probable_prime(n: int) -> bool:
    """Strong probable-prime test: Miller-Rabin on fixed bases plus strong Lucas.

    Exact (no pseudoprimes known or possible) for n < 2^64.
    """
    if n < 2:
        return False
    for p in SMALL_PRIMES:
        if n % p == 0:
            return n == p
    for a in MR_BASES:
        if not _strong_probable_prime(n, a):
            return False
    return _strong_lucas_probable_prime(n)


def next_prime(n: int) -> int:
    """Smallest probable prime strictly greater than n."""
    if n < 2:
        return 2
    c = n + 1
    if c == 2:
        return 2
    if c % 2 == 0:
        c += 1
    while not is_probable_prime(c):
        c += 2
    return c


def smallest_prime_with_digits(m: int) -> int:
    """Smallest prime with exactly m decimal digits (2, 11, 101, 1009, ...)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return 2
    return next_prime(10 ** (m - 1))


def primes_below(n: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if n < 3:
        return []
    sieve = bytearray([1]) * n
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n, p)))
    return [i for i in range(n) if sieve[i]]


def trial_factor(n: int, limit: int = 10**7) -> list[int]:
    """Prime factors (with multiplicity) by trial division up to ``limit``.

    A cofactor left above ``limit**2`` is returned as-is.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for p in (2, 3):
        while n % p == 0:
            out.append(p)
            n //= p
    f = 5
    while f * f <= n and f <= limit:
        for c in (f, f + 2):
            while n % c == 0:
                out.append(c)
                n //= c
        f += 6
    if n > 1:
        out.append(n)
    return out
