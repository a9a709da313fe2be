from fractions import Fraction

import mpmath
import pytest

from fibarctan import series
from fibarctan.angle import AngleSum, atan, certified_value
from fibarctan.ball import CertifiedReal, atan_rational
from fibarctan.catalog import Arity, identity_info, term_generator
from fibarctan.errors import ParityError, UsageError
from fibarctan.fib import fib, lucas
from fibarctan.series import golden_arctan, pi_quarter, tail_bound, verify_infinite

from .test_catalog import INFINITE_IDS


def inside(ball, value):
    lo = mpmath.mpf(ball.lower.numerator) / ball.lower.denominator
    hi = mpmath.mpf(ball.upper.numerator) / ball.upper.denominator
    return lo <= value <= hi


def test_pi_quarter_examples():
    b64, b128 = pi_quarter(64), pi_quarter(128)
    with mpmath.workdps(60):
        assert inside(b64, mpmath.pi / 4)
    assert b128.radius <= b64.radius
    assert b64.overlaps(certified_value([atan(1)], 64))


def test_golden_arctan():
    ball = golden_arctan(128)
    assert ball.radius <= Fraction(1, 2**128)
    with mpmath.workdps(80):
        assert inside(ball, mpmath.atan((mpmath.sqrt(5) - 1) / 2))
    assert ball.to_decimal(17) == "0.55357435889704525"
    wide = 2 * golden_arctan(100)
    assert wide.contains(atan_rational(2, 140))


def test_tail_bound_examples():
    assert tail_bound("I-E7", None, 10).bound == Fraction(2, 28657) == Fraction(2, fib(23))
    assert tail_bound("I-E4", None, 10).bound == Fraction(1, 17711) == Fraction(1, fib(22))
    # the coefficient 2 of the doubled series enters the bound
    assert tail_bound("I-E6", None, 10).bound == 2 * 2 * Fraction(1, lucas(22))
    with pytest.raises(UsageError):
        tail_bound("I-E7", None, 0)


@pytest.mark.parametrize("ident", INFINITE_IDS)
def test_tail_bound_decays(ident):
    info = identity_info(ident)
    m = None if info.arity is Arity.NONE else (3 if info.admits_m(3) else 4)
    for N in range(1, 60):
        assert tail_bound(ident, m, N + 2).bound <= tail_bound(ident, m, N).bound


@pytest.mark.parametrize("ident", INFINITE_IDS)
def test_tail_bound_against_long_partial_sums(ident):
    """mpmath oracle: the true remainder, approximated by 300 more terms."""
    info = identity_info(ident)
    ms = [None] if info.arity is Arity.NONE else [m for m in (1, 2, 5, 8) if info.admits_m(m)]
    with mpmath.workdps(120):
        for m in ms:
            term = term_generator(ident, m)
            for N in (1, 3, 10, 25):
                rest = mpmath.fsum(term(n).coeff * mpmath.atan(mpmath.mpf(term(n).arg.numerator) / term(n).arg.denominator)
                                   for n in range(N + 1, N + 300))
                b = tail_bound(ident, m, N).bound
                assert abs(rest) <= mpmath.mpf(b.numerator) / b.denominator


def test_verify_constants():
    for ident in ("I-E7", "I-E6", "I-E4"):
        r = verify_infinite(ident, None, 50)
        assert r.status == "verified"
        assert r.lhs.radius <= Fraction(1, 10**50) and r.rhs.radius <= Fraction(1, 10**50)
    r = verify_infinite("I-E7", None, 50)
    assert 100 <= r.terms_used <= 140
    with mpmath.workdps(70):
        assert inside(r.lhs, mpmath.pi / 4)


def test_verify_trivial_zero():
    for digits in (1, 10, 60):
        r = verify_infinite("C3-b", 0, digits)
        assert r.status == "verified"
        assert r.lhs == CertifiedReal(0, 0, r.lhs.prec) and r.rhs.midpoint == 0 and r.rhs.radius == 0


def test_radius_monotone_in_digits():
    for ident, m in (("I-E4", None), ("C2-b", 3), ("C1-c", 5)):
        prev = None
        for digits in (5, 10, 20, 40, 80):
            r = verify_infinite(ident, m, digits)
            width = max(r.lhs.radius, r.rhs.radius)
            if prev is not None:
                assert width <= prev
            prev = width


def test_falsified_and_inconclusive(monkeypatch):
    real = series.closed_form_value
    monkeypatch.setattr(series, "closed_form_value",
                        lambda i, m, bits: real(i, m, bits) + Fraction(1, 10**20))
    assert verify_infinite("I-E7", None, 30).status == "falsified"
    monkeypatch.setattr(series, "closed_form_value",
                        lambda i, m, bits: real(i, m, bits).widen(Fraction(1, 10**10)))
    assert verify_infinite("I-E7", None, 30).status == "inconclusive"


def test_errors():
    with pytest.raises(ParityError):
        verify_infinite("C3-a", 2, 10)
    with pytest.raises(UsageError):
        verify_infinite("I-E4", None, 0)
