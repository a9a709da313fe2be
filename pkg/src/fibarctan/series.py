"""Certified evaluation of the infinite arctangent series.

The left side of an infinite identity is enclosed as a partial-sum ball
widened by a rigorous tail bound; the right side is its closed form as a
ball.  The two are then compared.

Tail bounds.  Every catalog series has non-negative arguments ``a_n`` with
``a_{n+1} <= a_n / 2`` (this follows from ``F(k+2) >= 2 F(k)`` and
``L(k+2) >= 2 L(k)``; the test suite checks it directly).  With
``atan(x) <= x`` and a constant coefficient ``c`` this gives

* monotone series:     ``|tail after N| <= 2 |c| a_{N+1}``
* alternating series:  ``|tail after N| <= |c| a_{N+1}``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .angle import AngleSum, certified_value
from .ball import CertifiedReal, atan_ball, pi_quarter, sqrt5
from .catalog import (
    GoldenArctan,
    PiQuarter,
    RationalAngles,
    closed_form,
    identity_info,
    term_generator,
    _infinite_info,
)
from .errors import UsageError

__all__ = [
    "pi_quarter",
    "golden_arctan",
    "TailBound",
    "tail_bound",
    "closed_form_value",
    "partial_sum",
    "InfiniteReport",
    "verify_infinite",
]


def golden_arctan(precision_bits: int) -> CertifiedReal:
    """Ball containing arctan(1/phi) = arctan((sqrt 5 - 1)/2), radius <= 2**-p."""
    if precision_bits < 8:
        raise ValueError("precision_bits must be >= 8")
    x = (sqrt5(precision_bits + 4) - 1).half()
    return atan_ball(x, precision_bits + 1)


@dataclass(frozen=True)
class TailBound:
    after_index: int
    bound: Fraction


def tail_bound(identity: str, m: Optional[int], N: int) -> TailBound:
    """Rigorous bound on ``|sum_{n > N} term(n)|``."""
    if N < 1:
        raise UsageError("tail_bound needs N >= 1")
    info = _infinite_info(identity, m)
    nxt = term_generator(info.id, m)(N + 1)
    factor = 1 if info.alternating else 2
    return TailBound(N, factor * abs(nxt.coeff) * nxt.arg)


def partial_sum(identity: str, m: Optional[int], N: int) -> AngleSum:
    term = term_generator(identity, m)
    return AngleSum(term(n) for n in range(1, N + 1))


def closed_form_value(identity: str, m: Optional[int], precision_bits: int) -> CertifiedReal:
    form = closed_form(identity, m)
    if isinstance(form, RationalAngles):
        return certified_value(form.angles, precision_bits)
    if isinstance(form, GoldenArctan):
        return golden_arctan(precision_bits)
    if isinstance(form, PiQuarter):
        return pi_quarter(precision_bits)
    raise TypeError(f"unexpected closed form {form!r}")


@dataclass(frozen=True)
class InfiniteReport:
    id: str
    m: Optional[int]
    digits: int
    lhs: CertifiedReal
    rhs: CertifiedReal
    terms_used: int
    status: str
    elapsed_ms: float = field(compare=False, default=0.0)

    @property
    def verified(self) -> bool:
        return self.status == "verified"


def _terms_needed(identity: str, m: Optional[int], eps: Fraction) -> int:
    N = 1
    while tail_bound(identity, m, N).bound > eps:
        N += 1
    return N


def verify_infinite(identity: str, m: Optional[int] = None, digits: int = 30) -> InfiniteReport:
    """Compare the series with its closed form to ``digits`` certified digits.

    The error budget splits a quarter to the tail, a quarter to rounding and
    leaves half as slack.  ``verified`` needs overlapping balls with both
    radii <= 10**-digits; ``falsified`` needs disjoint balls.
    """
    if digits < 1:
        raise UsageError("digits must be >= 1")
    start = time.perf_counter()
    info = identity_info(identity)
    eps = Fraction(1, 10**digits)
    N = _terms_needed(info.id, m, eps / 4)
    tail = tail_bound(info.id, m, N).bound
    # certified_value radius <= 2**(1-p) * (1 + N) <= eps / 4
    bits = max(8, (8 * (N + 1) * 10**digits).bit_length() + 1)
    lhs = certified_value(partial_sum(info.id, m, N), bits).widen(tail)
    rhs = closed_form_value(info.id, m, bits)
    if not lhs.overlaps(rhs):
        status = "falsified"
    elif lhs.radius <= eps and rhs.radius <= eps:
        status = "verified"
    else:
        status = "inconclusive"
    elapsed = (time.perf_counter() - start) * 1000.0
    return InfiniteReport(info.id, m, digits, lhs, rhs, N, status, elapsed)
