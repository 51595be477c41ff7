from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ppforge.egf import (
    SNAPSHOTS,
    BinOp,
    Const,
    ExprSyntaxError,
    PoleAtOrigin,
    Trig,
    Var,
    check_snapshot,
    computed_prefix,
    cosine_sum_diagnostic,
    egf_terms,
    expand,
    integrality,
    parse,
    select,
    to_text,
)
from ppforge.kernel import euler_secant, zigzag

F = Fraction


def test_parse_examples():
    assert parse("1/cos(x)") == BinOp("/", Const(F(1)), Trig("cos", 1))
    assert parse("(sin(x)+cos(3x))/cos(4x)") == BinOp(
        "/", BinOp("+", Trig("sin", 1), Trig("cos", 3)), Trig("cos", 4)
    )
    assert parse("sin(3*x)") == parse("sin(3x)") == parse(" sin ( 3 x ) ")
    assert parse("x") == Var()
    assert parse("1/2") == Const(F(1, 2))


@pytest.mark.parametrize(
    "text",
    ["(cos(2x)+sin(2x))/cos(2x)", "(1+sin(x))/cos(x)", "-x*sin(2x)/(1-cos(x)/3)", "2-(3-x)"],
)
def test_pretty_print_roundtrip(text):
    e = parse(text)
    assert parse(to_text(e)) == e


@pytest.mark.parametrize(
    "text, pos",
    [("tan(x)", 0), ("sin(x", 5), ("1+", 2), ("cos(65x)", 4)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse(text)
    assert info.value.position >= 0


def test_expand_sin():
    assert expand("sin(x)", 5).coeffs == [0, 1, 0, F(-1, 6), 0, F(1, 120)]


def test_expand_secant():
    assert expand("1/cos(x)", 6).coeffs == [1, 0, F(1, 2), 0, F(5, 24), 0, F(61, 720)]


def test_expand_self_quotient():
    assert expand("cos(x)/cos(x)", 10).coeffs == [1] + [0] * 10


def test_pole_at_origin():
    with pytest.raises(PoleAtOrigin, match="pole at x=0"):
        expand("1/sin(x)", 4)


def test_egf_terms_zigzag():
    assert egf_terms("(1+sin(x))/cos(x)", 12) == [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792]


def test_egf_terms_generator():
    assert egf_terms("(sin(x)+cos(3x))/cos(4x)", 9) == [1, 1, 7, 47, 497, 6241, 95767, 1704527, 34741217]


def test_odd_positions():
    assert select(egf_terms("sin(x)/cos(2x)", 12), "odd") == [1, 11, 361, 24611, 2873041, 512343611]
    assert select(egf_terms("(cos(2x)+sin(2x))/cos(2x)", 10), "odd") == [2, 16, 512, 34816, 4063232]


def test_integrality_reported():
    terms = egf_terms("1/(2-cos(x))", 6)
    flags = integrality(terms)
    assert len(flags) == 6
    assert flags[0] and terms[0] == 1


def test_kernel_agreement():
    sec = egf_terms("1/cos(x)", 201)
    zz = egf_terms("(1+sin(x))/cos(x)", 201)
    for n in range(0, 201):
        assert zz[n] == zigzag(n)
        if n % 2 == 0:
            assert sec[n] == euler_secant(n)


@pytest.mark.parametrize("oeis_id", sorted(SNAPSHOTS))
def test_snapshots(oeis_id):
    assert check_snapshot(SNAPSHOTS[oeis_id])


def test_snapshot_extension_is_integral():
    ext = computed_prefix(SNAPSHOTS["A000281"], extra=5)
    assert all(v.denominator == 1 for v in ext)


def test_cosine_sum_diagnostic():
    d = cosine_sum_diagnostic()
    assert 52571 in d.listed
    # listed values are unsigned; a(10) = -(E_10 + 2 + 2^11)
    assert all(d.magnitudes_match)
    nonzero = [v for v in d.computed if v]
    assert nonzero[5] == -52571 == -(50521 + 2 + 2**11)
    assert [v > 0 for v in nonzero[:4]] == [True, False, True, False]


# ring laws on random small expressions

_leaf = st.one_of(
    st.integers(-3, 3).map(lambda v: Const(F(v))),
    st.builds(Trig, st.sampled_from(["sin", "cos"]), st.integers(1, 5)),
)


def _tree(children):
    return st.builds(BinOp, st.sampled_from(["+", "-", "*"]), children, children)


exprs = st.recursive(_leaf, _tree, max_leaves=6)
units = st.builds(
    BinOp, st.just("+"), st.integers(1, 4).map(lambda v: Const(F(v))), st.builds(Trig, st.just("cos"), st.integers(1, 5))
)

N = 12


@given(exprs, exprs)
def test_product_law(f, g):
    lhs = expand(BinOp("*", f, g), N).coeffs
    a, b = expand(f, N).coeffs, expand(g, N).coeffs
    rhs = [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1)]
    assert lhs == rhs


@given(exprs, units)
def test_quotient_law(f, g):
    q = expand(BinOp("/", f, g), N)
    back = expand(g, N) * q
    assert back.coeffs == expand(f, N).coeffs


@given(st.lists(st.integers(1, 6), min_size=1, max_size=3), st.integers(1, 4))
def test_cosine_only_is_even(js, d):
    num = "+".join(f"cos({j}x)" for j in js)
    coeffs = expand(f"({num})/(1+cos({d}x))", 15).coeffs
    assert all(c == 0 for c in coeffs[1::2])


@given(st.integers(1, 6), st.integers(1, 4))
def test_sine_over_even_cos_is_odd(j, d):
    coeffs = expand(f"sin({j}x)/cos({2 * d}x)", 15).coeffs
    assert all(c == 0 for c in coeffs[0::2])
