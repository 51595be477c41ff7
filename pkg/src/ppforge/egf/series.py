"""Exact truncated power series and EGF extraction.

A series c_0..c_N is stored as integers e_n with a shared denominator D,
c_n = e_n / (n! D).  In that form products are binomial convolutions and
quotients are integer long division, so no rational arithmetic happens in
the inner loops.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from .._backend import kernels
from .expr import Const, Neg, Trig, TrigExpr, Var, parse


class PoleAtOrigin(ZeroDivisionError):
    """Division by a series whose constant term is zero."""

    def __init__(self):
        super().__init__("pole at x=0")


class PowerSeries:
    """Exact series through x^order."""

    __slots__ = ("_num", "_den")

    def __init__(self, scaled: list[int], den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            scaled = [-v for v in scaled]
            den = -den
        g = reduce(math.gcd, scaled, den)
        if g > 1:
            scaled = [v // g for v in scaled]
            den //= g
        self._num = list(scaled)
        self._den = den

    @classmethod
    def from_coeffs(cls, coeffs) -> PowerSeries:
        cs = [Fraction(c) for c in coeffs]
        den = reduce(math.lcm, (c.denominator for c in cs), 1)
        return cls([(c * den * math.factorial(n)).numerator for n, c in enumerate(cs)], den)

    @classmethod
    def constant(cls, value, order: int) -> PowerSeries:
        q = Fraction(value)
        return cls([q.numerator] + [0] * order, q.denominator)

    @property
    def order(self) -> int:
        return len(self._num) - 1

    @property
    def coeffs(self) -> list[Fraction]:
        out = []
        f = 1
        for n, v in enumerate(self._num):
            if n:
                f *= n
            out.append(Fraction(v, f * self._den))
        return out

    def egf(self) -> list[Fraction]:
        """a(n) = n! c_n."""
        return [Fraction(v, self._den) for v in self._num]

    def _check(self, other: PowerSeries):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        if other.order != self.order:
            raise ValueError("series orders differ")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        d = math.lcm(self._den, other._den)
        a, b = d // self._den, d // other._den
        return PowerSeries([a * u + b * v for u, v in zip(self._num, other._num)], d)

    def __neg__(self):
        return PowerSeries([-v for v in self._num], self._den)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        prod = kernels.egf_multiply(self._num, other._num, self.order + 1)
        return PowerSeries(prod, self._den * other._den)

    def __truediv__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        h0 = other._num[0]
        if h0 == 0:
            raise PoleAtOrigin()
        N = self.order
        g = kernels.egf_divide(self._num, other._num, N + 1)
        # g[n] = n! h0^(n+1) [x^n](F/H) in scaled units; bring to h0^(N+1)
        scaled = []
        p = 1
        for n in range(N, -1, -1):
            scaled.append(other._den * g[n] * p)
            p *= h0
        scaled.reverse()
        return PowerSeries(scaled, self._den * p)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((tuple(self._num), self._den))

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"PowerSeries([{shown}{more}], order={self.order})"


def _trig_series(func: str, j: int, order: int) -> PowerSeries:
    scaled = [0] * (order + 1)
    start = 1 if func == "sin" else 0
    jp = j**start
    sign = 1
    for n in range(start, order + 1, 2):
        scaled[n] = sign * jp
        sign = -sign
        jp *= j * j
    return PowerSeries(scaled)


def expand(expr: TrigExpr | str, order: int) -> PowerSeries:
    """Taylor coefficients c_0..c_order of ``expr``, exactly."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if isinstance(expr, str):
        expr = parse(expr)
    memo: dict = {}

    def walk(e: TrigExpr) -> PowerSeries:
        hit = memo.get(e)
        if hit is not None:
            return hit
        if isinstance(e, Const):
            out = PowerSeries.constant(e.value, order)
        elif isinstance(e, Var):
            out = PowerSeries([0, 1] + [0] * (order - 1) if order else [0])
        elif isinstance(e, Trig):
            out = _trig_series(e.func, e.freq, order)
        elif isinstance(e, Neg):
            out = -walk(e.operand)
        else:
            a, b = walk(e.left), walk(e.right)
            if e.op == "+":
                out = a + b
            elif e.op == "-":
                out = a - b
            elif e.op == "*":
                out = a * b
            else:
                out = a / b
        memo[e] = out
        return out

    return walk(expr)


def egf_terms(expr: TrigExpr | str, count: int) -> list[Fraction]:
    """The first ``count`` values a(n) = n! [x^n] expr, n = 0..count-1.

    Values are exact rationals; integrality is not assumed, see
    :func:`integrality`.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    return expand(expr, count - 1).egf()


def integrality(terms: list[Fraction]) -> list[bool]:
    return [Fraction(t).denominator == 1 for t in terms]


def select(terms: list, parity: str | None) -> list:
    """Keep all terms, or only those at even or odd positions."""
    if parity in (None, "all"):
        return list(terms)
    if parity == "even":
        return list(terms[0::2])
    if parity == "odd":
        return list(terms[1::2])
    raise ValueError(f"unknown parity {parity!r}")
