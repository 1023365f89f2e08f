import random
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softcore.exactnum import (
    Polynomial,
    RationalFunction,
    close,
    interpolate,
    poly_real_roots,
    prec_real,
    rational_roots,
    rf_diff,
    rf_normalize,
    squarefree_decomposition,
)

X = Polynomial([0, 1], "chi")


def P(*c):
    return Polynomial(list(c), "chi")


def rand_poly(rng, deg, lo=-5, hi=5):
    while True:
        p = P(*[F(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(deg + 1)])
        if p.degree == deg:
            return p


# ---- polynomials

def test_trailing_zeros_are_dropped():
    assert list(P(1, 2, 0, 0).coeffs) == [1, 2]
    assert P(0, 0).degree == float("-inf")


def test_ints_become_fractions():
    assert all(isinstance(c, F) for c in P(1, 2, 3).coeffs)


def test_divmod_roundtrip():
    rng = random.Random(3)
    for _ in range(30):
        a, b = rand_poly(rng, 5), rand_poly(rng, 2)
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_compose_and_call_agree():
    p, g = P(1, -2, 3), P(F(1, 2), 1)
    for x in (F(0), F(3, 7), F(-2)):
        assert p.compose(g)(x) == p(g(x))


def test_primitive_has_integer_coefficients_and_positive_lc():
    p = P(F(-1, 2), F(-3, 4)).primitive()
    assert list(p.coeffs) == [2, 3]


# ---- rational functions

def test_normalize_cancels_common_factor():
    f = rf_normalize(RationalFunction(P(-1, 0, 1), P(-1, 1)))
    assert f.num == P(1, 1) and f.den == P(1)


def test_normalize_removes_content():
    f = rf_normalize(RationalFunction(P(2, 2), P(2)))
    assert f.num == P(1, 1) and f.den == P(1)


def test_zero_denominator_rejected():
    with pytest.raises(ValueError, match="undefined rational function"):
        RationalFunction(P(1), P())


def test_denominator_is_monic():
    f = RationalFunction(P(1), P(4, 2))
    assert f.den.lc == 1


def test_random_common_factors_cancel():
    rng = random.Random(11)
    for _ in range(100):
        p, q, g = (rand_poly(rng, rng.randint(0, 6)) for _ in range(3))
        expected = RationalFunction(p, q)
        got = RationalFunction(p * g, q * g)
        assert got.num == expected.num and got.den == expected.den


def test_normalize_is_idempotent():
    rng = random.Random(5)
    for _ in range(20):
        f = RationalFunction(rand_poly(rng, 3), rand_poly(rng, 2))
        once = rf_normalize(f)
        twice = rf_normalize(once)
        assert once.num == twice.num and once.den == twice.den


def test_derivative_of_constant():
    assert rf_diff(RationalFunction(P(7))).is_zero()


def test_derivative_simple_pole():
    beta = F(3)
    f = RationalFunction(P(1), P(-beta, 1))
    assert rf_diff(f) == RationalFunction(P(-1), P(-beta, 1) ** 2)


def test_derivative_matches_finite_difference():
    # the difference quotient cancels 20 digits, so it runs with 20 guard digits
    # on top of the 40 the comparison is made at
    f = RationalFunction(P(0, 2), P(-1, 0, 1))  # 2 chi / (chi^2 - 1)
    exact_val = rf_diff(f)(F(3))
    with mpmath.workdps(40 + 20):
        h = mpmath.mpf(10) ** -20
        g = lambda x: 2 * x / (x * x - 1)
        fd = (g(mpmath.mpf(3) + h) - g(mpmath.mpf(3) - h)) / (2 * h)
    with mpmath.workdps(40):
        assert abs(fd - mpmath.mpf(exact_val.numerator) / exact_val.denominator) < mpmath.mpf(10) ** -35


def test_leibniz_rule_random():
    rng = random.Random(7)
    for _ in range(100):
        f = RationalFunction(rand_poly(rng, rng.randint(0, 3)), rand_poly(rng, rng.randint(0, 2)))
        g = RationalFunction(rand_poly(rng, rng.randint(0, 3)), rand_poly(rng, rng.randint(0, 2)))
        assert rf_diff(f * g) == rf_diff(f) * g + f * rf_diff(g)


def test_numeric_mode_keeps_values():
    with mpmath.workdps(30):
        f = RationalFunction(P(1, 1).to_mpf(30), P(-1, 0, 1).to_mpf(30))
        assert close(f(mpmath.mpf(3)), mpmath.mpf(1) / 2, 25)


# ---- field axioms

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)


@settings(max_examples=200, deadline=None)
@given(fractions, fractions, fractions)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=50, deadline=None)
@given(st.lists(fractions, min_size=1, max_size=5), st.lists(fractions, min_size=1, max_size=5))
def test_polynomial_product_evaluates_pointwise(a, b):
    p, q = P(*a), P(*b)
    for x in (F(0), F(1, 3), F(-2)):
        assert (p * q)(x) == p(x) * q(x)


# ---- roots

def test_roots_of_table_row_one():
    roots = poly_real_roots(Polynomial([-16, 0, 1], "beta"), 30)
    assert [r.value for r in roots] == [-4, 4]


def test_no_real_roots():
    assert poly_real_roots(Polynomial([1, 0, 1], "beta")) == []


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        poly_real_roots(Polynomial([], "beta"))


def _bisect(f, a, b, n=200):
    fa = f(a)
    for _ in range(n):
        m = (a + b) / 2
        fm = f(m)
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return (a + b) / 2


def test_quartic_roots_match_plain_bisection():
    # beta^4 - 162 beta^2 + 2916 (second q = 2 condition at Z = 1, nu = 1)
    p = Polynomial([2916, 0, -162, 0, 1], "beta")
    with mpmath.workdps(40):
        roots = [r.value for r in poly_real_roots(p, 30)]
        f = lambda x: x ** 4 - 162 * x ** 2 + 2916
        ref = []
        for a, b in ((-20, -9), (-9, 0), (0, 9), (9, 20)):
            ref.append(_bisect(f, mpmath.mpf(a), mpmath.mpf(b)))
        assert len(roots) == 4
        for r, s in zip(roots, ref):
            assert abs(r - s) < mpmath.mpf(10) ** -20


def test_root_residual_bound_and_multiplicity():
    p = Polynomial.from_roots([F(1, 3), F(1, 3), F(-2), F(5, 7)], "x") * Polynomial([3, 0, 1], "x")
    digits = 30
    roots = poly_real_roots(p, digits)
    assert 0 <= len(roots) <= p.degree
    assert [r.multiplicity for r in roots] == [1, 2, 1]
    norm = sum(abs(c) for c in p.coeffs)
    with mpmath.workdps(digits + 10):
        for r in roots:
            val = sum(mpmath.mpf(c.numerator) / c.denominator * r.value ** i for i, c in enumerate(p.coeffs))
            assert abs(val) <= mpmath.mpf(10) ** (-digits + 2) * norm * max(1, abs(r.value)) ** p.degree


def test_squarefree_decomposition():
    p = Polynomial.from_roots([1, 1, 1, 2, 3, 3], "x")
    parts = {m: f for f, m in squarefree_decomposition(p)}
    assert parts[1] == Polynomial.from_roots([2], "x")
    assert parts[2] == Polynomial.from_roots([3], "x")
    assert parts[3] == Polynomial.from_roots([1], "x")


def test_rational_roots():
    p = Polynomial.from_roots([F(1, 2), F(-3), F(2, 3)], "x") * Polynomial([1, 0, 1], "x")
    assert rational_roots(p) == [F(-3), F(1, 2), F(2, 3)]


def test_interpolate_recovers_polynomial():
    p = P(3, F(-1, 2), 0, 2)
    xs = [F(i) for i in range(4)]
    assert interpolate(xs, [p(x) for x in xs], "chi") == p


def test_prec_real_precision():
    with mpmath.workdps(60):
        x = prec_real(F(1, 3), 50)
        assert abs(x - mpmath.mpf(1) / 3) < mpmath.mpf(10) ** -50
