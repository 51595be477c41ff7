import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ppforge.cli.appendix import read_appendix
from ppforge.kernel import primes_below, smallest_prime_with_digits
from ppforge.repsearch import (
    PrecisionExhausted,
    RepQuery,
    RepresentationNotFound,
    approx_expression,
    approx_terms,
    approx_value,
    batch_search,
    canonical_vector,
    eighteen_digit_case,
    find_representation,
    format_approx,
    gcd_report,
    in_lattice,
    in_text_errata,
    pair_order,
    pair_value,
    partner,
    verify_appendix,
    zeta_exact_check,
    zeta_value,
)
from ppforge.series import approx_eq8_rational

F = Fraction
ROWS, ROW_ERRORS = read_appendix()


def _one(P, pair, **kw):
    return find_representation(RepQuery(P, pairs=(pair,), **kw))[0]


def test_pair_structure():
    assert partner(3) == -16 and partner(5) == 64 and partner(7) == -256
    assert pair_value(3) == F(1, 16)
    for k in range(3, 40, 2):
        assert pair_value(k) == approx_eq8_rational(k, 1) + partner(k) * approx_eq8_rational(k, 4)


def test_query_validation():
    with pytest.raises(ValueError):
        RepQuery(1)
    with pytest.raises(ValueError):
        RepQuery(23, k_max=8)
    with pytest.raises(ValueError):
        RepQuery(23, pairs=((5, 15),), k_max=13)
    with pytest.raises(ValueError):
        RepQuery(23, mode="every")


def test_precision_policy():
    q = RepQuery(23)
    assert q.bound == 10**8
    assert q.start_digits() == 40 + 2 * 2 + 10 * 8
    assert RepQuery(10**17 + 3).bound == 10**22


def test_pair_order():
    assert pair_order(9)[:4] == ((3, 5), (3, 7), (3, 9), (5, 7))
    assert pair_order(9, "lex")[:4] == ((3, 5), (3, 7), (3, 9), (5, 7))
    assert pair_order(9)[4] == (5, 9)
    assert len(pair_order(25)) == math.comb(12, 2)


def test_23_at_stated_pair():
    rep = _one(23, (5, 7))
    assert rep.coeffs == (-1, 63, 4032, 28, -7168)
    assert rep.approx_text == "61425/8/Pi^6+562275/4/Pi^8"
    assert zeta_exact_check(rep) == 23
    u = approx_terms(5, 7, rep.coeffs)
    assert [a for a, _ in u] == [F(61425, 8), F(562275, 4)]


def test_7_at_stated_pair():
    rep = _one(7, (7, 9))
    assert rep.coeffs == (-1, -228, 58368, 33, 33792)


def test_first_found_uses_smallest_pair():
    # S(3,1) - 16 S(3,4) = 1/16, so (3,5) always succeeds first
    rep = find_representation(RepQuery(23))[0]
    assert (rep.k1, rep.k2) == (3, 5)
    assert rep.zeta_exact and rep.residual_log10 <= -(rep.digits // 2)


def test_31_all_pairs_contains_rows():
    reps = find_representation(RepQuery(31, k_max=9, mode="all-pairs"))
    found = {(r.k1, r.k2): r.coeffs for r in reps}
    assert found[(5, 7)] == (-1, 504, 32256, -64, 16384)
    assert found[(7, 9)] == (-1, -424, 108544, 66, 67584)


def test_zeta_exact_examples():
    assert zeta_value(5, 7, (-1, 63, 4032, 28, -7168)) == 23
    assert (63 + F(63, 64)) * 120 * F(1, 945) == F(65, 8)
    assert (28 - F(7, 64)) * 5040 * F(1, 9450) == F(119, 8)
    assert zeta_value(7, 9, (-1, -228, 58368, 33, 33792)) == 7
    assert 16 * F(1, 15) - 256 * F(1, 3840) == 1


def test_approx_examples():
    v31 = approx_value(approx_terms(5, 7, (-1, 504, 32256, -64, 16384)))
    assert str(v31).startswith("30.0299856")
    with mpmath.workdps(40):
        v = mpmath.mpf(1946319750384384375) / mpmath.pi**20
    assert mpmath.nstr(v, 13) == "221930369.2869"
    rep = _one(23, (5, 7))
    terms, value = approx_expression(rep)
    assert terms == rep.approx and abs(float(value.value) - 23) < 3


def test_format_approx():
    assert format_approx([(F(-5, 2), 4), (F(3), 6)]) == "-5/2/Pi^4+3/Pi^6"


def test_gcd_report():
    rep = gcd_report((-1, 63, 4032, 28, -7168))
    assert rep["pairwise"]["ab"] == 63 and not rep["coprime"]


def test_not_found_reports_scan():
    # coefficients for this pair are far above a bound of 10
    with pytest.raises(RepresentationNotFound) as info:
        find_representation(RepQuery(23, pairs=((5, 7),), coeff_bound=10))
    assert info.value.pairs == ((5, 7),)


def test_precision_cap():
    with pytest.raises(PrecisionExhausted):
        find_representation(RepQuery(23, digits_cap=50))


def test_composite_target():
    rep = _one(221930581, (5, 7))
    assert not rep.is_prime and rep.zeta_exact


def test_determinism():
    a = find_representation(RepQuery(97, mode="all-pairs", k_max=11))
    b = find_representation(RepQuery(97, mode="all-pairs", k_max=11))
    assert [(r.k1, r.k2, r.coeffs, r.residual_log10) for r in a] == [
        (r.k1, r.k2, r.coeffs, r.residual_log10) for r in b
    ]


# appendix corpus


def test_appendix_parses():
    assert not ROW_ERRORS
    assert len(ROWS) == 44


@pytest.mark.parametrize("row", ROWS, ids=lambda r: f"{r.P}-{r.k1}-{r.k2}")
def test_appendix_row_rediscovered(row):
    assert canonical_vector(row.P, row.k1, row.k2) == row.vector
    rep = _one(row.P, (row.k1, row.k2))
    assert rep.coeffs == row.vector
    assert rep.approx_text == row.approx_text


def test_verify_appendix_report():
    report = verify_appendix(ROWS)
    s = report.summary()
    assert report.ok
    assert s["rows"] == s["passed"] == s["zeta_exact"] == s["approx_match"] == s["rediscovered"] == 44
    assert all(r.residual_log10 <= -40 for r in report.rows)
    assert {e.P for e in report.errata} == {7, 31}


def test_in_text_errata():
    errata = {e.P: e for e in in_text_errata()}
    assert "84" in errata[7].printed
    assert errata[7].resolved.endswith("-4578525/4/pi^8")
    assert errata[31].resolved.startswith("31 = 504 S(5,1)")
    assert "leave -62" in errata[31].evidence


def test_eighteen_digit_case():
    rep = eighteen_digit_case()
    assert rep.target == smallest_prime_with_digits(18) == 10**17 + 3
    assert rep.rational_sum == rep.target
    assert rep.approx_matches_printed and rep.decimal_shift_match
    assert rep.printed_vector_residual == pytest.approx(-2 * rep.target, rel=1e-12)
    assert zeta_value(19, 23, rep.vector) == rep.target


# properties


@settings(max_examples=30)
@given(st.integers(2, 10**9), st.sampled_from([(3, 5), (5, 7), (7, 9), (3, 9), (5, 11)]))
def test_canonical_vector_in_lattice(P, pair):
    vec = canonical_vector(P, *pair)
    if vec is None:
        return
    assert vec[0] == -1
    assert in_lattice(vec, P, *pair)
    assert zeta_value(pair[0], pair[1], vec) == P


@settings(max_examples=15)
@given(st.sampled_from(primes_below(3000)))
def test_soundness_gate(P):
    rep = find_representation(RepQuery(P, k_max=13))[0]
    assert rep.coeffs[0] == -1
    assert rep.zeta_exact and zeta_exact_check(rep) == P
    assert rep.residual_log10 <= -(rep.digits / 2)
    u = approx_terms(rep.k1, rep.k2, rep.coeffs)
    assert rep.approx == u and [e for _, e in u] == [rep.k1 + 1, rep.k2 + 1]


def test_approximation_quality_small():
    for P in primes_below(2000):
        rep = find_representation(RepQuery(P, k_max=25))[0]
        if abs(float(rep.approx_value.value) - P) >= P / 10:
            assert rep.k1 <= 5 and P < 10


def test_approximation_quality_large():
    rep = eighteen_digit_case()
    assert rep.vector is not None
    P = rep.target
    v = approx_value(approx_terms(19, 23, rep.vector), 40).value
    with mpmath.workdps(40):
        agree = -mpmath.log10(abs(v - P) / P)
    assert agree >= 5


def test_batch_small():
    targets = [smallest_prime_with_digits(m) for m in range(1, 13)]
    out = batch_search(targets, RepQuery(2, k_max=25))
    assert [o.target for o in out] == targets
    assert all(o.representation is not None and o.error is None for o in out)


def test_batch_records_failures():
    out = batch_search([23, 29], RepQuery(2, k_max=5, coeff_bound=10))
    assert all(o.representation is None and o.error for o in out)
