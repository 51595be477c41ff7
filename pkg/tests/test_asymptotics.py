from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ppforge.asymptotics import (
    FitError,
    agreement_digits,
    fit_growth,
    fit_sequence,
    minimal_polynomial,
    recognize_constant,
    richardson,
)
from ppforge.egf import egf_terms
from ppforge.kernel import HiReal, to_fraction

F = Fraction


@pytest.fixture(scope="module")
def a006873():
    # the source indexes this sequence from 1
    terms = egf_terms("(sin(x)+cos(3x))/cos(4x)", 240)
    return terms, fit_sequence(terms, offset=1)


def test_a006873_fit(a006873):
    _, fit = a006873
    assert (fit.c, fit.s, fit.t) == (8, 0, 0)
    assert fit.d_form == "root of x^4 - 32*x^2 + 128"
    with mpmath.workdps(60):
        want = 2 * mpmath.sqrt(4 + 2 * mpmath.sqrt(2))
        assert abs(fit.d.value - want) < mpmath.mpf(10) ** -50
    assert fit.formula() == "8^n*Gamma(n)/(d*pi^(n))"


def test_a006873_agreement(a006873):
    terms, fit = a006873
    assert abs(agreement_digits(terms, fit, 200) - 95) <= 3
    assert agreement_digits(terms, fit, 3) <= 1
    assert len(str(abs(terms[199].numerator))) == 454


def test_agreement_slope(a006873):
    terms, fit = a006873
    ns = list(range(50, 241, 10))
    ys = [agreement_digits(terms, fit, n) for n in ns]
    slope = (len(ns) * sum(n * y for n, y in zip(ns, ys)) - sum(ns) * sum(ys)) / (
        len(ns) * sum(n * n for n in ns) - sum(ns) ** 2
    )
    assert abs(slope - mpmath.log10(3)) <= 0.05


def test_fit_quality_invariant(a006873):
    terms, fit = a006873
    assert agreement_digits(terms, fit, fit.n_used) >= fit.quality - 2


def test_zigzag_fit():
    fit = fit_sequence(egf_terms("(1+sin(x))/cos(x)", 200))
    assert (fit.c, fit.s, fit.t) == (2, 1, 1)
    assert fit.formula() == "2^(n+2)*Gamma(n+1)/pi^(n+1)"


def test_stride_two_fit():
    fit = fit_sequence(egf_terms("(cos(2x)+sin(2x))/cos(2x)", 241), stride=2)
    assert fit.parity == 1
    # at n = 2m - 1 this is 2^(4m) (2m-1)!/pi^(2m)
    assert fit.formula() == "4^(n+1)*Gamma(n+1)/pi^(n+1)"


def test_scale_invariance():
    terms = egf_terms("(sin(x)+cos(3x))/cos(4x)", 160)
    base = fit_sequence(terms, offset=1)
    moved = fit_sequence([v * F(-3, 7) for v in terms], offset=1)
    assert (base.c, base.s, base.t) == (moved.c, moved.s, moved.t)
    with mpmath.workdps(40):
        assert abs(base.d.value / moved.d.value - mpmath.mpf(3) / 7) < mpmath.mpf(10) ** -25
    assert moved.signs == "-"


def test_constant_sequence():
    with pytest.raises(FitError, match="no growth"):
        fit_growth([1] * 60)


def test_too_few_terms():
    with pytest.raises(FitError):
        fit_growth(egf_terms("1/cos(x)", 10))


def test_exact_formula_full_precision(a006873):
    # terms generated by the fitted formula itself agree to working precision
    _, fit = a006873
    terms = [to_fraction(fit.evaluate(n, 400)) for n in range(1, 241)]
    assert agreement_digits(terms, fit, 200) >= 390


def test_richardson_limit():
    ns = list(range(10, 60))
    with mpmath.workdps(40):
        vals = [mpmath.mpf(2) + mpmath.mpf(1) / n + mpmath.mpf(3) / n**2 for n in ns]
        L, _ = richardson(ns, vals)
    assert abs(L - 2) < 1e-20


def _hr(x, d=130):
    return HiReal(x, d)


def test_minimal_polynomial_examples():
    with mpmath.workdps(150):
        assert minimal_polynomial(_hr(mpmath.sqrt(2))).poly == (-2, 0, 1)
        assert minimal_polynomial(_hr(mpmath.mpf(1))).poly == (-1, 1)
        x = 2 * mpmath.sqrt(4 + 2 * mpmath.sqrt(2))
        assert minimal_polynomial(_hr(x)).poly == (128, 0, -32, 0, 1)


def test_recognize_transcendental_none():
    with mpmath.workdps(150):
        assert recognize_constant(_hr(+mpmath.pi), max_degree=4, coeff_bound=100) is None


@settings(max_examples=25)
@given(st.integers(1, 50), st.integers(2, 30).filter(lambda q: int(q**0.5) ** 2 != q))
def test_no_false_accept(p, q):
    with mpmath.workdps(150):
        x = p + mpmath.sqrt(q)
        rec = minimal_polynomial(_hr(x), max_degree=4, coeff_bound=10**4)
    assert rec is not None
    with mpmath.workdps(300):
        x2 = p + mpmath.sqrt(q)
        val = mpmath.fsum(c * x2**i for i, c in enumerate(rec.poly))
        assert abs(val) < mpmath.mpf(10) ** -30
    assert rec.poly == (p * p - q, -2 * p, 1)
