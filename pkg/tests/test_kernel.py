from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from ppforge.kernel import (
    HiReal,
    bernoulli,
    bernoulli_akiyama_tanigawa,
    bernoulli_from_tangent,
    bernoulli_via_zeta,
    euler_secant,
    format_decimal,
    format_scientific,
    gamma_one_quarter,
    gamma_three_quarters,
    is_probable_prime,
    next_prime,
    pi_const,
    primes_below,
    significant_agreement,
    smallest_prime_with_digits,
    tangent,
    to_fraction,
    trial_factor,
    von_staudt_denominator,
    zeta_even_rational,
    zigzag,
)

PI_50 = "3.1415926535897932384626433832795028841971693993751"


def test_pi_digits():
    assert str(pi_const(50)) == PI_50


def test_gamma_three_quarters():
    assert str(gamma_three_quarters(20)) == "1.2254167024651776451"


def test_gamma_reflection():
    # Gamma(1/4) Gamma(3/4) = pi sqrt(2)
    g1 = gamma_one_quarter(60).value
    g3 = gamma_three_quarters(60).value
    with mpmath.workdps(80):
        assert abs(g1 * g3 - mpmath.pi * mpmath.sqrt(2)) < mpmath.mpf(10) ** -58


def test_power_values():
    # the values that appear in the closed-form table's denominators
    assert format_decimal(mpmath.mpf(pi_const(40).value) ** 7, 15) == "3020.29322777679"
    g = gamma_three_quarters(40)
    assert str(HiReal((g ** 8).value, 20)) == "5.0847588849315832466"


def test_hireal_arithmetic():
    a = HiReal(mpmath.mpf(2), 30)
    b = a.sqrt()
    assert significant_agreement((b * b).value, 2, cap=30) >= 29
    assert (a + 1).value == 3
    assert (1 - a).value == -1
    assert (a / 4).value == 0.5
    assert (HiReal(mpmath.mpf(1), 30).exp().ln()).value == pytest.approx(1)
    assert (a * Fraction(1, 2)).value == 1


def test_hireal_precision_is_min():
    a = HiReal(mpmath.mpf(1), 40) + HiReal(mpmath.mpf(1), 20)
    assert a.digits == 20


def test_format_decimal_rounding():
    assert format_decimal(Fraction(25, 10), 1) == "2"
    assert format_decimal(Fraction(35, 10), 1) == "4"
    assert format_decimal(Fraction(-1, 3), 3) == "-0.333"
    assert format_decimal(Fraction(10**30), 3) == "1.00e+30"


def test_format_scientific():
    assert format_scientific(Fraction(1, 16), 6) == "6.25000e-2"
    assert format_scientific(mpmath.mpf(-123.5), 3) == "-1.24e+2"


@given(st.fractions(min_value=Fraction(-10**9), max_value=Fraction(10**9)).filter(bool))
def test_format_scientific_digit_count(q):
    s = format_scientific(q, 12)
    mant = s.lstrip("-").split("e")[0].replace(".", "")
    assert len(mant) == 12
    assert abs(Fraction(s.split("e")[0]) * Fraction(10) ** int(s.split("e")[1]) - q) <= abs(q) * Fraction(1, 10**11)


def test_to_fraction_exact():
    assert to_fraction(mpmath.mpf(0.375)) == Fraction(3, 8)
    assert to_fraction(mpmath.mpf(-3)) == -3


def test_significant_agreement():
    assert significant_agreement(Fraction(1385), mpmath.mpf("1385.26"), cap=4) == 3
    assert significant_agreement(61, mpmath.mpf("61.0271871"), cap=2) == 2


# bernoulli and friends


def test_bernoulli_examples():
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(14) == Fraction(7, 6)
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(0) == 1
    assert bernoulli(7) == 0


@pytest.mark.parametrize("n", range(0, 121, 2))
def test_bernoulli_three_routes_agree(n):
    b = bernoulli(n)
    assert bernoulli_akiyama_tanigawa(n) == b
    if n >= 2:
        assert bernoulli_from_tangent(n) == b
        assert bernoulli_via_zeta(n) == b


@pytest.mark.parametrize("n", range(2, 201, 2))
def test_von_staudt(n):
    assert bernoulli(n).denominator == von_staudt_denominator(n)


def test_zeta_even_rational_examples():
    assert zeta_even_rational(2) == Fraction(1, 6)
    assert zeta_even_rational(4) == Fraction(1, 90)
    assert zeta_even_rational(6) == Fraction(1, 945)
    assert zeta_even_rational(12) == Fraction(691, 638512875)


@pytest.mark.parametrize("m", range(2, 41, 2))
def test_zeta_even_rational_numeric(m):
    with mpmath.workdps(50):
        z = mpmath.zeta(m) / mpmath.pi**m
        q = zeta_even_rational(m)
        assert abs(z - mpmath.mpf(q.numerator) / q.denominator) < mpmath.mpf(10) ** -45 * z


def test_euler_secant_examples():
    assert [euler_secant(n) for n in range(0, 9, 2)] == [1, 1, 5, 61, 1385]
    assert euler_secant(8) == 5 * 277


def test_zigzag_prefix():
    assert [zigzag(n) for n in range(12)] == [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792]


def test_zigzag_splits_into_secant_and_tangent():
    for n in range(0, 201):
        if n % 2 == 0:
            assert zigzag(n) == euler_secant(n)
        else:
            assert zigzag(n) == tangent(n)


def test_secant_against_mpmath():
    # mpmath's euler numbers carry alternating signs
    for n in range(0, 60, 2):
        assert euler_secant(n) == abs(int(mpmath.eulernum(n, exact=True)))


def test_bad_arguments():
    with pytest.raises(ValueError):
        bernoulli(-1)
    with pytest.raises(ValueError):
        zeta_even_rational(3)


# primes


def _sieve(n):
    flags = bytearray([1]) * n
    flags[:2] = b"\x00\x00"
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(n) if flags[i]]


def test_primes_below_matches_sieve():
    assert primes_below(10**5) == _sieve(10**5)


def test_probable_prime_small_range():
    ref = set(_sieve(20000))
    assert all(is_probable_prime(n) == (n in ref) for n in range(20000))


@pytest.mark.parametrize("n", [561, 1105, 1729, 2465, 2821, 6601, 8911, 3215031751, 2152302898747, 3825123056546413051])
def test_pseudoprimes_rejected(n):
    assert not is_probable_prime(n)


def test_large_known_primes():
    assert is_probable_prime(2**127 - 1)
    assert not is_probable_prime(2**128 + 1)
    assert is_probable_prime(euler_secant(510))


def test_smallest_prime_with_digits():
    assert [smallest_prime_with_digits(m) for m in range(1, 5)] == [2, 11, 101, 1009]
    assert smallest_prime_with_digits(18) == 10**17 + 3
    assert smallest_prime_with_digits(101) == 10**100 + 267


def test_next_prime():
    assert next_prime(13) == 17
    assert next_prime(1) == 2


def test_trial_factor():
    assert trial_factor(221930581) == [31, 41, 283, 617]
    assert trial_factor(1385) == [5, 277]


@given(st.integers(min_value=2, max_value=10**12))
def test_trial_factor_product(n):
    fs = trial_factor(n)
    prod = 1
    for f in fs:
        prod *= f
    assert prod == n
    assert fs == sorted(fs)
