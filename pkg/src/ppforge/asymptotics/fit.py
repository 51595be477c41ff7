"""Fitting a(n) ~ c^n Gamma(n+s) / (d pi^(n+t)) to exact sequence terms.

The term ratio a(n+stride)/a(n) behaves like (c/pi)^stride times a
polynomial in n fixed by s; corrections from farther singularities decay
geometrically, so Richardson extrapolation in 1/n pins c/pi quickly.  s
follows from the ratios once c is known, and then
D(n) = c^n Gamma(n+s) / (pi^n |a(n)|) converges to d pi^t.  The split of D
into d and pi^t is chosen by which t makes d recognizable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..kernel.numeric import HiReal, significant_agreement, workdps
from .recognize import Recognition, poly_text, recognize_constant

T_RANGE = range(-2, 4)
MIN_TERMS = 32


class FitError(ValueError):
    """The sequence does not support a growth fit."""


@dataclass(frozen=True)
class GrowthCandidate:
    c: Fraction
    s: int
    limit: mpmath.mpf  # (c/pi)^stride estimate
    s_estimate: float


@dataclass(frozen=True)
class GrowthFit:
    c: Fraction
    s: int
    t: int
    d: HiReal
    d_form: str | None
    n_used: int
    quality: int
    stride: int = 1
    offset: int = 0
    parity: int | None = None  # residue of supported n mod 2 when stride is 2
    signs: str = "+"  # "+", "-", "alternating" or "mixed"
    prefactor_power: Fraction | None = None  # j with d = c^(-j), if any

    def formula(self) -> str:
        tt = f"n+{self.t}" if self.t > 0 else (f"n-{-self.t}" if self.t < 0 else "n")
        ss = f"n+{self.s}" if self.s > 0 else (f"n-{-self.s}" if self.s < 0 else "n")
        c = str(self.c)
        if self.prefactor_power is not None:
            j = self.prefactor_power
            cp = f"{c}^(n+{j})" if j > 0 else (f"{c}^(n-{-j})" if j < 0 else f"{c}^n")
            if self.c == 1:
                cp = "1"
            return f"{cp}*Gamma({ss})/pi^({tt})"
        return f"{c}^n*Gamma({ss})/(d*pi^({tt}))"

    def evaluate(self, n: int, digits: int):
        """Fitted |a(n)| as an mpf at ``digits``."""
        with workdps(digits):
            return (
                mpmath.mpf(self.c.numerator) ** n / mpmath.mpf(self.c.denominator) ** n
                * mpmath.gamma(n + self.s)
                / (self.d.value * mpmath.pi ** (n + self.t))
            )


def _abs_terms(a, stride: int, offset: int):
    """(n, |a(n)|) over the supported indices, plus parity and sign pattern."""
    vals = [Fraction(v) for v in a]
    parity = None
    if stride == 2:
        even = sum(1 for i, v in enumerate(vals) if v and (i + offset) % 2 == 0)
        odd = sum(1 for i, v in enumerate(vals) if v and (i + offset) % 2 == 1)
        parity = 0 if even >= odd else 1
    pts = []
    for i, v in enumerate(vals):
        n = i + offset
        if parity is not None and n % 2 != parity:
            continue
        pts.append((n, v))
    # drop leading zeros / small-n irregularities: keep the longest nonzero tail
    tail = []
    for n, v in reversed(pts):
        if v == 0:
            break
        tail.append((n, v))
    tail.reverse()
    # sign pattern of the asymptotic regime (second half of the terms)
    signs = [1 if v > 0 else -1 for _, v in tail[len(tail) // 2 :]]
    if all(x > 0 for x in signs):
        pattern = "+"
    elif all(x < 0 for x in signs):
        pattern = "-"
    elif all(signs[i] == -signs[i + 1] for i in range(len(signs) - 1)):
        pattern = "alternating"
    else:
        pattern = "mixed"
    return [(n, abs(v)) for n, v in tail], parity, pattern


def richardson(seq_n: list[int], seq_v: list, max_order: int = 12):
    """Extrapolate values f(n) = L + a1/n + a2/n^2 + ... to L.

    Order k interpolates the last k+1 points as a polynomial in 1/n and
    evaluates it at 0.  The order with the smallest change from the
    previous order wins; that change is the error estimate.
    Returns (estimate, error estimate).
    """
    ests = [seq_v[-1]]
    for k in range(1, max_order + 1):
        if len(seq_v) < k + 1:
            break
        ns = seq_n[-(k + 1):]
        vs = seq_v[-(k + 1):]
        hs = [mpmath.mpf(1) / n for n in ns]
        est = mpmath.mpf(0)
        for i in range(k + 1):
            w = mpmath.mpf(1)
            for j in range(k + 1):
                if j != i:
                    w *= hs[j] / (hs[j] - hs[i])
            est += w * vs[i]
        ests.append(est)
    if len(ests) == 1:
        return ests[0], abs(ests[0])
    errs = [abs(ests[k] - ests[k - 1]) for k in range(1, len(ests))]
    k = min(range(len(errs)), key=lambda i: errs[i])
    return ests[k + 1], errs[k]


def _as_mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def fit_growth(a, stride: int = 1, offset: int = 0, digits: int = 60) -> GrowthCandidate:
    """(c, s) from the term ratios; ``a[i]`` is the term with index offset + i."""
    if stride not in (1, 2):
        raise ValueError("stride must be 1 or 2")
    pts, _, _ = _abs_terms(a, stride, offset)
    if len(pts) < MIN_TERMS:
        raise FitError(f"need at least {MIN_TERMS} nonzero terms at stride {stride}, have {len(pts)}")
    with workdps(digits):
        ns = []
        ratios = []
        for (n0, v0), (n1, v1) in zip(pts, pts[1:]):
            if n0 < 1:
                continue
            ns.append(n0)
            ratios.append(_as_mpf(v1 / v0))
        # factorial growth needs eventually increasing ratios
        half = len(ratios) // 2
        if any(ratios[i + 1] <= ratios[i] for i in range(half, len(ratios) - 1)):
            if all(abs(r - 1) < mpmath.mpf(10) ** (-digits // 2) for r in ratios[half:]):
                raise FitError("no growth: ratios are constant")
            raise FitError("non-monotone ratios")
        scaled = [r / mpmath.mpf(n) ** stride for n, r in zip(ns, ratios)]
        L, err = richardson(ns, scaled)
        c_real = mpmath.pi * (L if stride == 1 else mpmath.sqrt(L))
        c = Fraction(str(mpmath.nstr(c_real, 30))).limit_denominator(1000)
        if abs(c_real - _as_mpf(c)) > mpmath.mpf(10) ** -8 * c_real:
            raise FitError(f"growth base {mpmath.nstr(c_real, 15)} is not a small rational times pi")
        base = (_as_mpf(c) / mpmath.pi) ** stride
        if stride == 1:
            s_seq = [r / base - n for n, r in zip(ns, ratios)]
        else:
            # r / base = (n + s)(n + s + 1)
            s_seq = [(-1 + mpmath.sqrt(1 + 4 * r / base)) / 2 - n for n, r in zip(ns, ratios)]
        s_est, _ = richardson(ns, s_seq)
        s = int(mpmath.nint(s_est))
        if abs(s_est - s) > 0.01:
            raise FitError(f"factorial shift {mpmath.nstr(s_est, 10)} is not an integer")
        return GrowthCandidate(c, s, L, float(s_est))


def _scale_sequence(pts, c: Fraction, s: int, digits: int):
    with workdps(digits):
        cm = _as_mpf(c)
        out = []
        for n, v in pts:
            out.append((n, cm**n * mpmath.gamma(n + s) / (mpmath.pi**n * _as_mpf(v))))
        return out


def _scale_limit(pts, c: Fraction, s: int, work: int):
    """Extrapolated D = lim c^n Gamma(n+s) / (pi^n |a(n)|) and its error."""
    D = _scale_sequence(pts[-16:], c, s, work)
    with workdps(work):
        return richardson([n for n, _ in D], [v for _, v in D])


def isolate_scale(a, c: Fraction, s: int, t: int, digits: int, stride: int = 1, offset: int = 0) -> HiReal:
    """d = lim c^n Gamma(n+s) / (pi^(n+t) |a(n)|)."""
    pts, _, _ = _abs_terms(a, stride, offset)
    work = digits + 20
    est, err = _scale_limit(pts, Fraction(c), s, work)
    with workdps(work):
        got = float(-mpmath.log10(err / abs(est))) if err else float(work)
        if got < digits:
            raise FitError(f"only {got:.0f} digits reachable with {len(pts)} terms, {digits} requested")
        return HiReal(est / mpmath.pi**t, digits)


def _digits_available(pts, c, s, work: int) -> int:
    est, err = _scale_limit(pts, c, s, work)
    with workdps(work):
        if not err:
            return work
        return int(-mpmath.log10(err / abs(est)))


def _small_rational(d: HiReal, max_den: int = 1000) -> Recognition | None:
    """d as p/q with q <= max_den when too few digits are known for PSLQ."""
    if d.digits < 16:
        return None
    with workdps(d.digits):
        q = Fraction(mpmath.nstr(d.value, d.digits)).limit_denominator(max_den)
        if q == 0:
            return None
        err = abs(d.value - _as_mpf(q)) / abs(d.value)
        if err > mpmath.mpf(10) ** (-(d.digits - 2)):
            return None
        res = float(mpmath.log10(err)) if err else float("-inf")
    poly = (-q.numerator, q.denominator)
    return Recognition(poly, f"root of {poly_text(poly)}", res, d.digits)


def refine_root(poly, approx: HiReal, digits: int):
    """The real root of ``poly`` nearest ``approx``, at ``digits``."""
    with workdps(digits):
        roots = mpmath.polyroots(list(reversed(poly)), maxsteps=200, extraprec=2 * digits)
        real = [mpmath.re(r) for r in roots if abs(mpmath.im(r)) < mpmath.mpf(10) ** (-digits // 2)]
        return min(real, key=lambda r: abs(r - approx.value))


def _prefactor_power(d: HiReal, c: Fraction) -> Fraction | None:
    """j with d = c^(-j), j a multiple of 1/4 in [-6, 6], if one fits."""
    with workdps(d.digits):
        for q in range(-24, 25):
            j = Fraction(q, 4)
            if abs(d.value * mpmath.power(_as_mpf(c), _as_mpf(j)) - 1) < mpmath.mpf(10) ** (-d.digits + 5):
                return j
    return None


def agreement_digits(a, fit: GrowthFit, n: int) -> int:
    """Leading significant digits shared by |a(n)| and the fitted formula.

    Capped at the digit count of |a(n)|'s numerator.
    """
    i = n - fit.offset
    if not 0 <= i < len(a):
        raise IndexError(f"term {n} not available")
    v = abs(Fraction(a[i]))
    if v == 0:
        raise ValueError("a(n) is zero")
    cap = len(str(v.numerator))
    work = max(fit.d.digits, cap) + 20
    approx = fit.evaluate(n, work)
    try:
        return significant_agreement(v, approx, cap=cap)
    except ValueError:
        return cap


def fit_sequence(a, stride: int = 1, offset: int = 0, max_degree: int = 8) -> GrowthFit:
    """Full fit: (c, s), then t and d with d recognized where possible."""
    cand = fit_growth(a, stride, offset)
    pts, parity, signs = _abs_terms(a, stride, offset)
    # raise the working precision until convergence, not rounding, limits D
    work = 60
    while True:
        avail = _digits_available(pts, cand.c, cand.s, work)
        if avail < work - 15 or work > 4000:
            break
        work *= 2
    d_digits = max(20, min(avail, work - 15) - 2)
    D = isolate_scale(a, cand.c, cand.s, 0, d_digits, stride, offset)
    best: tuple[int, HiReal, Recognition | None] | None = None
    for t in sorted(T_RANGE, key=abs):
        with workdps(d_digits):
            d = HiReal(D.value / mpmath.pi**t, d_digits)
        rec = None
        for bound in (10**4, 100):
            # the precondition 20 + degree * log10(bound) <= search digits
            deg = min(max_degree, int((d_digits // 2 - 20) / math.log10(bound)))
            if deg >= 1:
                rec = recognize_constant(d, max_degree=deg, coeff_bound=bound)
                break
        if rec is None:
            rec = _small_rational(d)
        if rec is not None:
            best = (t, d, rec)
            break
    if best is None:
        best = (0, D, None)
    t, d, rec = best
    d_form = rec.form if rec is not None else None
    if rec is not None and rec.poly is not None:
        # the recognized root is known to any precision
        top = max(len(str(v.numerator)) for _, v in pts) + 30
        d = HiReal(refine_root(rec.poly, d, top), top)
    j = _prefactor_power(d, cand.c)
    n_used = pts[-1][0]
    fit = GrowthFit(cand.c, cand.s, t, d, d_form, n_used, 0, stride, offset, parity, signs, j)
    quality = agreement_digits(a, fit, n_used)
    return GrowthFit(cand.c, cand.s, t, d, d_form, n_used, quality, stride, offset, parity, signs, j)
