from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from fibarctan.ball import CertifiedReal, atan_ball, atan_rational, pi_quarter, sqrt5


def mp_contains(ball, value):
    lo = mpmath.mpf(ball.lower.numerator) / ball.lower.denominator
    hi = mpmath.mpf(ball.upper.numerator) / ball.upper.denominator
    return lo <= value <= hi


@settings(max_examples=300)
@given(st.integers(0, 10**8), st.integers(1, 10**8), st.sampled_from([16, 64, 200]))
def test_atan_rational_encloses_mpmath(p, q, bits):
    ball = atan_rational(Fraction(p, q), bits)
    assert ball.radius <= Fraction(1, 2**bits)
    with mpmath.workprec(bits + 80):
        assert mp_contains(ball, mpmath.atan(mpmath.mpf(p) / q))


def test_negative_argument_is_odd():
    a, b = atan_rational(Fraction(-3, 7), 80), atan_rational(Fraction(3, 7), 80)
    assert a == -b


def test_pi_quarter_contract():
    for bits in (8, 64, 128, 500):
        ball = pi_quarter(bits)
        assert ball.radius <= Fraction(1, 2**bits)
        with mpmath.workprec(bits + 80):
            assert mp_contains(ball, mpmath.pi / 4)


def test_sqrt5_encloses():
    ball = sqrt5(100)
    with mpmath.workprec(300):
        assert mp_contains(ball, mpmath.sqrt(5))
    assert ball.radius <= Fraction(1, 2**100)


def test_atan_ball_widens_by_radius():
    x = CertifiedReal.from_bounds(Fraction(1, 3) - Fraction(1, 10**9), Fraction(1, 3) + Fraction(1, 10**9), 80)
    ball = atan_ball(x, 60)
    with mpmath.workprec(200):
        for v in (Fraction(1, 3) - Fraction(1, 10**9), Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**9)):
            assert mp_contains(ball, mpmath.atan(mpmath.mpf(v.numerator) / v.denominator))


def test_precision_change_keeps_enclosure():
    ball = atan_rational(Fraction(2, 9), 120)
    for p in (10, 40, 119, 200):
        assert ball.at(p).contains(ball)


def test_arithmetic_and_exact():
    a = CertifiedReal.exact(Fraction(1, 3), 40)
    assert a.contains(Fraction(1, 3))
    b = a + a - Fraction(2, 3)
    assert b.contains(0)
    assert (3 * a).contains(1)
    assert CertifiedReal.exact(5, 0) == CertifiedReal(5, 0, 0)


def test_decimal_rendering():
    ball = pi_quarter(200)
    assert ball.to_decimal(15) == "0.785398163397448"
    assert (-ball).to_decimal(3) == "-0.785"
    assert CertifiedReal(0, 0, 10).radius_string() == "0"
    assert CertifiedReal(1, 1, 0).radius_string() == "1.0e+0"
    r = CertifiedReal(0, 3, 10)      # 3/1024 = 0.0029296875
    assert r.radius_string() == "3.0e-3"


def test_negative_radius_rejected():
    with pytest.raises(ValueError):
        CertifiedReal(0, -1, 3)
