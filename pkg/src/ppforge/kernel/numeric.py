"""Arbitrary-precision reals tagged with a decimal precision.

Values are mpmath ``mpf`` numbers.  Every computation runs at the requested
number of decimal digits plus ``GUARD_DIGITS`` and the result carries the
requested precision, so printing rounds away the guard digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp

GUARD_DIGITS = 15


def workdps(digits: int):
    """Context manager running mpmath at ``digits`` plus guard digits."""
    return mpmath.workdps(digits + GUARD_DIGITS)


def to_fraction(x) -> Fraction:
    """Exact rational value of a binary mpf."""
    if not isinstance(x, mpmath.mpf):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        x = mpmath.mpf(x)
    sign, man, exp, _ = x._mpf_
    if not man:
        if x != 0:
            raise ValueError("not a finite number")
        return Fraction(0)
    v = Fraction(int(man) << exp) if exp >= 0 else Fraction(int(man), 1 << -exp)
    return -v if sign else v


def from_fraction(q: Fraction):
    """Fraction -> mpf at the current working precision."""
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def _round_significand(x, digits: int) -> tuple[str, int, int]:
    """(sign, n, e10) with |x| ~ n 10^(e10 - digits + 1), n of ``digits`` digits, half-even."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    q = x if isinstance(x, Fraction) else to_fraction(x)
    sign = "-" if q < 0 else ""
    q = abs(q)
    e10 = math.floor(math.log10(q.numerator) - math.log10(q.denominator))
    # correct the float estimate of the exponent
    while Fraction(10) ** e10 > q:
        e10 -= 1
    while Fraction(10) ** (e10 + 1) <= q:
        e10 += 1
    scaled = q * Fraction(10) ** (digits - 1 - e10)
    n = round(scaled)  # Fraction.__round__ is half-even
    if n >= 10**digits:
        n //= 10
        e10 += 1
    return sign, n, e10


def format_decimal(x, digits: int) -> str:
    """Round ``x`` to ``digits`` significant digits, half-even, as text.

    Positional notation is used while the decimal exponent lies in
    [-6, digits + 6); scientific notation beyond that.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if x == 0:
        return "0"
    sign, n, e10 = _round_significand(x, digits)
    s = str(n)
    if -6 <= e10 < digits + 6:
        point = e10 + 1
        if point <= 0:
            body = "0." + "0" * (-point) + s
        elif point >= len(s):
            body = s + "0" * (point - len(s))
        else:
            body = s[:point] + "." + s[point:]
        return sign + body
    mant = s[0] + ("." + s[1:] if len(s) > 1 else "")
    return f"{sign}{mant}e{e10:+d}"


def format_scientific(x, digits: int) -> str:
    """Always ``d.ddd...e+N`` with exactly ``digits`` significant digits."""
    if x == 0:
        return "0." + "0" * (digits - 1) + "e+0" if digits > 1 else "0e+0"
    sign, n, e10 = _round_significand(x, digits)
    s = str(n)
    mant = s[0] + ("." + s[1:] if len(s) > 1 else "")
    return f"{sign}{mant}e{e10:+d}"


def significant_agreement(a, b, cap: int | None = None) -> int:
    """Count of leading significant decimal digits shared by ``a`` and ``b``.

    Measured as floor(-log10 |a - b| / |a|) with ``a`` the reference value.
    ``cap`` bounds the count, e.g. by the digit length of an exact integer
    (61 vs 61.027 agree on 2 digits, not 3).
    """
    a = Fraction(a) if isinstance(a, (int, Fraction)) else to_fraction(a)
    b = Fraction(b) if isinstance(b, (int, Fraction)) else to_fraction(b)
    if a == b:
        raise ValueError("values are identical; agreement is unbounded")
    rel = abs(a - b) / abs(a)
    e = math.log10(rel.numerator) - math.log10(rel.denominator)
    n = max(0, math.floor(-e))
    return n if cap is None else min(n, cap)


@dataclass(frozen=True)
class HiReal:
    """A real number with an explicit decimal precision."""

    value: mpmath.mpf
    digits: int

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError("digits must be >= 1")

    def __str__(self) -> str:
        return format_decimal(self.value, self.digits)

    def __float__(self) -> float:
        return float(self.value)

    def fraction(self) -> Fraction:
        return to_fraction(self.value)

    def _digits_with(self, other) -> int:
        return min(self.digits, other.digits) if isinstance(other, HiReal) else self.digits

    def _lift(self, other):
        if isinstance(other, HiReal):
            return other.value
        if isinstance(other, Fraction):
            return from_fraction(other)
        return mpmath.mpf(other)

    def _binary(self, other, op):
        d = self._digits_with(other)
        with workdps(d):
            return HiReal(op(self.value, self._lift(other)), d)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __neg__(self):
        return HiReal(-self.value, self.digits)

    def __abs__(self):
        return HiReal(abs(self.value), self.digits)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        with workdps(self.digits + len(str(abs(n)))):
            return HiReal(self.value**n, self.digits)

    def sqrt(self) -> HiReal:
        with workdps(self.digits):
            return HiReal(mpmath.sqrt(self.value), self.digits)

    def exp(self) -> HiReal:
        with workdps(self.digits):
            return HiReal(mpmath.exp(self.value), self.digits)

    def ln(self) -> HiReal:
        with workdps(self.digits):
            return HiReal(mpmath.log(self.value), self.digits)

    def __lt__(self, other):
        return self.value < self._lift(other)

    def __gt__(self, other):
        return self.value > self._lift(other)


def pi_const(digits: int) -> HiReal:
    """pi to ``digits`` significant digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with workdps(digits):
        return HiReal(+mp.pi, digits)


def agm(a, b):
    """Arithmetic-geometric mean at the current working precision."""
    eps = mpmath.mpf(2) ** (-mp.prec + 4)
    while abs(a - b) > eps * abs(a):
        a, b = (a + b) / 2, mpmath.sqrt(a * b)
    return (a + b) / 2


def gamma_three_quarters(digits: int) -> HiReal:
    """Gamma(3/4) from the lemniscate AGM and the reflection formula.

    Gamma(1/4)^2 = (2 pi)^(3/2) / AGM(1, sqrt 2) and
    Gamma(1/4) Gamma(3/4) = pi sqrt 2.
    """
    if digits < 10:
        raise ValueError("digits must be >= 10")
    with workdps(digits):
        g14 = mpmath.sqrt((2 * mp.pi) ** mpmath.mpf(1.5) / agm(mpmath.mpf(1), mpmath.sqrt(2)))
        return HiReal(mp.pi * mpmath.sqrt(2) / g14, digits)


def gamma_one_quarter(digits: int) -> HiReal:
    with workdps(digits):
        g = gamma_three_quarters(digits + 5).value
        return HiReal(mp.pi * mpmath.sqrt(2) / g, digits)
