import math
import random

import mpmath
import pytest
from hypothesis import given, strategies as st

from _planted import planted_case, run_trials
from ppforge.relation import (
    InconclusiveSearch,
    RelationProblem,
    canonical,
    ext_gcd,
    find_integer_relation,
    gauss_reduce,
    kernel_basis_3,
    norm2,
    search_relation,
    verify_relation,
)
from ppforge.series import eval_S


def _s3(d):
    return [1, eval_S(3, 1, d).value, eval_S(3, 4, d).value]


def test_lambert_identity():
    res = find_integer_relation(RelationProblem(tuple(_s3(60)), 60, 10**4), _s3)
    assert res is not None
    assert res.coeffs == (1, -16, 256)
    assert res.confidence == "accepted"


def test_golden_ratio():
    with mpmath.workdps(60):
        phi = (1 + mpmath.sqrt(5)) / 2
        vals = (mpmath.mpf(1), phi, phi**2)
    res = find_integer_relation(RelationProblem(vals, 50, 100))
    assert res.coeffs == (1, 1, -1)


def test_pi_excluded():
    with mpmath.workdps(80):
        vals = (mpmath.mpf(1), +mpmath.pi)
    assert find_integer_relation(RelationProblem(vals, 60, 10**6)) is None
    out = search_relation(RelationProblem(vals, 60, 10**6))
    assert out.status == "excluded"
    assert out.norm_bound > 0


def test_inconclusive_is_distinct():
    # 12 digits cannot separate a relation of size 10^6 from noise
    with mpmath.workdps(30):
        vals = (mpmath.mpf(1), mpmath.e, mpmath.pi, mpmath.euler)
    try:
        res = find_integer_relation(RelationProblem(vals, 12, 10**6))
    except InconclusiveSearch:
        return
    assert res is None


def test_verify_relation_examples():
    assert verify_relation((1, -16, 256), _s3(110), 100) <= -90
    x = mpmath.mpf(2) / 3
    assert verify_relation((1, -1), (x, x), 30) == float("-inf")
    with mpmath.workdps(50):
        r = verify_relation((1, 1), (1, +mpmath.pi), 40)
    assert r == pytest.approx(mpmath.log10(1 + mpmath.pi), abs=1e-9)
    with pytest.raises(ValueError):
        verify_relation((1,), (1, 2), 20)


def test_canonical():
    assert canonical((0, -4, 6)) == (0, 2, -3)
    with pytest.raises(ValueError):
        canonical((0, 0))


def test_problem_validation():
    with pytest.raises(ValueError):
        RelationProblem((1,), 30, 10)
    with pytest.raises(ValueError):
        RelationProblem((1, 2), 30, 0)


def test_planted_recovery_sample():
    ok, wrong, inconclusive = run_trials(150, seed=7)
    assert wrong == 0
    assert ok >= 148


@given(st.integers(0, 2**32))
def test_no_false_accepts(seed):
    c, values = planted_case(random.Random(seed))
    out = search_relation(RelationProblem(tuple(values(80)), 80, 10**6), values)
    if out.status == "found":
        assert verify_relation(out.result.coeffs, values(120), 120) <= -40


@given(st.integers(0, 2**32), st.sampled_from([(3, 1), (-7, 2), (1, 10**5), (12345678, 1000)]))
def test_scale_invariance(seed, factor):
    c, values = planted_case(random.Random(seed))
    base = search_relation(RelationProblem(tuple(values(80)), 80, 10**6), values)

    def scaled(d):
        with mpmath.workdps(d + 20):
            return [v * factor[0] / factor[1] for v in values(d)]

    moved = search_relation(RelationProblem(tuple(scaled(80)), 80, 10**6), scaled)
    assert base.status == moved.status
    if base.status == "found":
        assert base.result.coeffs == moved.result.coeffs


# exact lattice helpers


@given(st.integers(-10**12, 10**12), st.integers(-10**12, 10**12))
def test_ext_gcd(a, b):
    g, s, t = ext_gcd(a, b)
    assert g >= 0 and s * a + t * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


@given(st.tuples(*[st.integers(-10**9, 10**9)] * 3).filter(any))
def test_kernel_basis(row):
    u, v = kernel_basis_3(row)
    for w in (u, v):
        assert sum(a * b for a, b in zip(row, w)) == 0
    # primitive rank-2 sublattice: cross product is a multiple of the primitive row
    cross = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    g = math.gcd(*row)
    prim = tuple(x // g for x in row)
    assert cross in (prim, tuple(-x for x in prim))


@given(
    st.tuples(*[st.integers(-10**6, 10**6)] * 3),
    st.tuples(*[st.integers(-10**6, 10**6)] * 3),
)
def test_gauss_reduce(u, v):
    cross = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    if not any(cross):
        return
    a, b = gauss_reduce(u, v)
    assert norm2(a) <= norm2(b)
    d = sum(x * y for x, y in zip(a, b))
    assert abs(2 * d) <= norm2(a)
    cross2 = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    assert cross2 in (cross, tuple(-x for x in cross))
