"""Every named arctangent identity, instantiated as exact angle sums.

Finite identities become a pair of :class:`AngleSum` (left and right side).
Infinite identities become a term generator for the left-hand series plus a
:class:`ClosedForm` for its value.  Ids name the identity by source and
position (``T1-b`` is the second member of the T1 family) rather than
by a bare number.

Conventions shared by all builders:

* alternating weights ``(-1)**(n-1)`` and leading factors of 2 are folded
  into term coefficients;
* ``m = 0`` instances are accepted wherever the identity is defined; they
  produce zero-argument terms and empty sums that verify trivially;
* the per-index identities (``L1-*``, ``E33``) take ``n >= 1`` in place of t.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from .angle import AngleSum, ArctanTerm, GaussianInt, make_rational, reduce_angle
from .errors import ArityError, DomainError, ParityError, UnknownIdentityError
from .fib import Parity, fib as F, lucas as L

__all__ = [
    "Kind",
    "Arity",
    "IdentityInfo",
    "IdentityInstance",
    "RationalAngles",
    "GoldenArctan",
    "PiQuarter",
    "ClosedForm",
    "FiniteReport",
    "list_identities",
    "identity_info",
    "build_finite",
    "verify_finite",
    "term_generator",
    "closed_form",
    "admissible_m",
]


class Kind(Enum):
    FINITE = "finite"
    INFINITE = "infinite"


class Arity(Enum):
    T = "t"
    M_T = "m,t"
    M_N = "m,n"
    M = "m"
    NONE = "-"


@dataclass(frozen=True)
class IdentityInfo:
    id: str
    arity: Arity
    parity: Parity
    kind: Kind
    description: str
    alternating: bool = False
    # smallest admissible m (ignored for ids without m)
    min_m: int = 0

    def admits_m(self, m: int) -> bool:
        return m >= self.min_m and self.parity.admits(m, 0)


@dataclass(frozen=True)
class RationalAngles:
    angles: AngleSum


@dataclass(frozen=True)
class GoldenArctan:
    """The constant arctan(1/phi), phi the golden ratio."""


@dataclass(frozen=True)
class PiQuarter:
    """The constant pi/4."""


ClosedForm = Union[RationalAngles, GoldenArctan, PiQuarter]


@dataclass(frozen=True)
class IdentityInstance:
    id: str
    m: Optional[int]
    t: Optional[int]
    lhs: AngleSum
    rhs: AngleSum


@dataclass(frozen=True)
class FiniteReport:
    id: str
    m: Optional[int]
    t: Optional[int]
    status: str
    gaussian: GaussianInt
    pi_multiple: int
    lhs: AngleSum
    rhs: AngleSum
    elapsed_ms: float = field(compare=False, default=0.0)

    @property
    def verified(self) -> bool:
        return self.status == "verified"


def _term(coeff: int, p: int, q: int) -> ArctanTerm:
    return ArctanTerm(coeff, make_rational(p, q))


def _s(n: int) -> int:
    """(-1)**(n-1)"""
    return 1 if n % 2 == 1 else -1


def _sum(coeff: Callable[[int], int], p: Callable[[int], int],
         q: Callable[[int], int], lo: int, hi: int) -> AngleSum:
    return AngleSum(_term(coeff(n), p(n), q(n)) for n in range(lo, hi + 1))


ONE = lambda n: 1
ALT = _s

# ---------------------------------------------------------------------------
# Finite builders: (m, t) -> (lhs, rhs).  For per-index ids the second
# parameter is n.

_FINITE: Dict[str, Callable[[Optional[int], int], Tuple[AngleSum, AngleSum]]] = {}
_INFO: Dict[str, IdentityInfo] = {}


def _register(info: IdentityInfo):
    def deco(fn):
        _INFO[info.id] = info
        if info.kind is Kind.FINITE:
            _FINITE[info.id] = fn
        return fn
    return deco


@_register(IdentityInfo("HR63-T5", Arity.T, Parity.NONE, Kind.FINITE,
                        "sum (-1)^(n+1) atan(1/F(2n)) = atan(F(t)/F(t+1))"))
def _hr63(m, t):
    lhs = _sum(ALT, ONE, lambda n: F(2 * n), 1, t)
    return lhs, AngleSum([_term(1, F(t), F(t + 1))])


@_register(IdentityInfo(
    "HR64", Arity.T, Parity.NONE, Kind.FINITE,
    "2 sum atan(1/L(2n)) = sum atan(1/F(2n+1)) - atan(1/L(2t+2)) + atan(1/3)"))
def _hr64(m, t):
    lhs = _sum(lambda n: 2, ONE, lambda n: L(2 * n), 1, t)
    rhs = (_sum(ONE, ONE, lambda n: F(2 * n + 1), 1, t)
           + AngleSum([_term(-1, 1, L(2 * t + 2)), _term(1, 1, 3)]))
    return lhs, rhs


def _lemma(id_, parity, desc, lhs_arg, rhs_kind, shift, sign):
    """Register a per-index identity ``atan(lhs_arg) = atan(a1) +- atan(a2)``.

    ``rhs_kind`` selects ``L(m)/L(..)`` or ``F(m)/F(..)``; the two right-hand
    denominators sit at ``2n + m + shift`` and ``2n + 3m + shift``.
    """
    seq = L if rhs_kind == "L" else F

    @_register(IdentityInfo(id_, Arity.M_N, parity, Kind.FINITE, desc))
    def build(m, n):
        lhs = AngleSum([ArctanTerm(1, lhs_arg(m, n))])
        rhs = AngleSum([_term(1, seq(m), seq(2 * n + m + shift)),
                        _term(sign, seq(m), seq(2 * n + 3 * m + shift))])
        return lhs, rhs
    return build


_F2m_over = lambda m, n: make_rational(F(2 * m), F(2 * n + 2 * m - 1))
_L_sq = lambda m, n: make_rational(L(m) ** 2 * L(2 * n + 2 * m), 5 * F(2 * n + 2 * m) ** 2)
_F_sq = lambda m, n: make_rational(F(m) ** 2 * L(2 * n + 2 * m), F(2 * n + 2 * m) ** 2)

_lemma("L1-1", Parity.M_EVEN,
       "atan(F(2m)/F(2n+2m-1)) = atan(L(m)/L(2n+m-1)) - atan(L(m)/L(2n+3m-1))",
       _F2m_over, "L", -1, -1)
_lemma("L1-2", Parity.M_ODD,
       "atan(F(2m)/F(2n+2m-1)) = atan(L(m)/L(2n+m-1)) + atan(L(m)/L(2n+3m-1))",
       _F2m_over, "L", -1, 1)
_lemma("L1-3", Parity.M_ODD,
       "atan(F(2m)/F(2n+2m-1)) = atan(F(m)/F(2n+m-1)) - atan(F(m)/F(2n+3m-1))",
       _F2m_over, "F", -1, -1)
_lemma("L1-4", Parity.M_EVEN,
       "atan(F(2m)/F(2n+2m-1)) = atan(F(m)/F(2n+m-1)) + atan(F(m)/F(2n+3m-1))",
       _F2m_over, "F", -1, 1)
_lemma("L1-5", Parity.M_ODD,
       "atan(L(m)^2 L(2n+2m)/(5F(2n+2m)^2)) = atan(L(m)/L(2n+m)) - atan(L(m)/L(2n+3m))",
       _L_sq, "L", 0, -1)
_lemma("L1-6", Parity.M_EVEN,
       "atan(L(m)^2 L(2n+2m)/(5F(2n+2m)^2)) = atan(L(m)/L(2n+m)) + atan(L(m)/L(2n+3m))",
       _L_sq, "L", 0, 1)
_lemma("L1-7", Parity.M_EVEN,
       "atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = atan(F(m)/F(2n+m)) - atan(F(m)/F(2n+3m))",
       _F_sq, "F", 0, -1)
_lemma("L1-8", Parity.M_ODD,
       "atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = atan(F(m)/F(2n+m)) + atan(F(m)/F(2n+3m))",
       _F_sq, "F", 0, 1)


@_register(IdentityInfo("E33", Arity.M_N, Parity.NONE, Kind.FINITE,
                        "atan(2/L(2n-1)) = atan(L(m)/L(2n+m-1)) + atan(F(m)/F(2n+m-1))"))
def _e33(m, n):
    lhs = AngleSum([_term(1, 2, L(2 * n - 1))])
    rhs = AngleSum([_term(1, L(m), L(2 * n + m - 1)), _term(1, F(m), F(2 * n + m - 1))])
    return lhs, rhs


# T1 family: plain telescoping of the lemma identities with a minus sign.

def _theorem1(id_, parity, desc, lhs_arg, seq, shift):
    @_register(IdentityInfo(id_, Arity.M_T, parity, Kind.FINITE, desc))
    def build(m, t):
        lhs = AngleSum(ArctanTerm(1, lhs_arg(m, n)) for n in range(1, t + 1))
        rhs = (_sum(ONE, lambda n: seq(m), lambda n: seq(2 * n + m + shift), 1, m)
               - _sum(ONE, lambda n: seq(m), lambda n: seq(2 * n + 2 * t + m + shift), 1, m))
        return lhs, rhs
    return build


_theorem1("T1-a", Parity.M_EVEN,
          "sum_1^t atan(F(2m)/F(2n+2m-1)) = sum_1^m atan(L(m)/L(2n+m-1)) - sum_1^m atan(L(m)/L(2n+2t+m-1))",
          _F2m_over, L, -1)
_theorem1("T1-b", Parity.M_ODD,
          "sum_1^t atan(F(2m)/F(2n+2m-1)) = sum_1^m atan(F(m)/F(2n+m-1)) - sum_1^m atan(F(m)/F(2n+2t+m-1))",
          _F2m_over, F, -1)
_theorem1("T1-c", Parity.M_ODD,
          "sum_1^t atan(L(m)^2 L(2n+2m)/(5F(2n+2m)^2)) = sum_1^m atan(L(m)/L(2n+m)) - sum_1^m atan(L(m)/L(2n+2t+m))",
          _L_sq, L, 0)
_theorem1("T1-d", Parity.M_EVEN,
          "sum_1^t atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_1^m atan(F(m)/F(2n+m)) - sum_1^m atan(F(m)/F(2n+2t+m))",
          _F_sq, F, 0)


def _theorem2(id_, desc, lhs_arg, seq, shift):
    @_register(IdentityInfo(id_, Arity.M_T, Parity.NONE, Kind.FINITE, desc, alternating=True))
    def build(m, t):
        lhs = AngleSum(ArctanTerm(_s(n), lhs_arg(m, n)) for n in range(1, t + 1))
        rhs = (_sum(ALT, lambda n: seq(m), lambda n: seq(2 * n + m + shift), 1, m)
               + _s(t) * _sum(ALT, lambda n: seq(m), lambda n: seq(2 * n + 2 * t + m + shift), 1, m))
        return lhs, rhs
    return build


_theorem2("T2-a",
          "sum_1^t (-1)^(n-1) atan(F(2m)/F(2n+2m-1)) = sum_1^m (-1)^(n-1) atan(L(m)/L(2n+m-1))"
          " + (-1)^(t-1) sum_1^m (-1)^(n-1) atan(L(m)/L(2n+2t+m-1))",
          _F2m_over, L, -1)
_theorem2("T2-b",
          "sum_1^t (-1)^(n-1) atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_1^m (-1)^(n-1) atan(F(m)/F(2n+m))"
          " + (-1)^(t-1) sum_1^m (-1)^(n-1) atan(F(m)/F(2n+2t+m))",
          _F_sq, F, 0)


def _two_over_L(weight):
    return lambda m: _sum(weight, lambda n: 2, lambda n: L(2 * n - 1), 1, m)


def _theorem3(id_, parity, desc, seq, other, weight):
    """2 sum_1^t w(n) atan(seq(m)/seq(2n+m-1)) in terms of 2/L(2n-1) and a tail.

    ``weight`` is ONE or ALT.  The constant-weight forms subtract the
    ``other``-sequence tail; the alternating form adds it with sign (-1)^(t-1).
    """
    alternating = weight is ALT

    @_register(IdentityInfo(id_, Arity.M_T, parity, Kind.FINITE, desc, alternating=alternating))
    def build(m, t):
        lhs = _sum(lambda n: 2 * weight(n), lambda n: seq(m), lambda n: seq(2 * n + m - 1), 1, t)
        tail = _sum(weight, lambda n: other(m), lambda n: other(2 * n + 2 * t + m - 1), 1, m)
        tail = _s(t) * tail if alternating else -tail
        rhs = (_two_over_L(weight)(m) + tail
               - _sum(weight, lambda n: seq(m), lambda n: seq(2 * n + m - 1), t + 1, t + m))
        return lhs, rhs
    return build


_theorem3("T3-a", Parity.M_ODD,
          "2 sum_1^t atan(L(m)/L(2n+m-1)) = sum_1^m atan(2/L(2n-1)) - sum_1^m atan(F(m)/F(2n+2t+m-1))"
          " - sum_{t+1}^{t+m} atan(L(m)/L(2n+m-1))",
          L, F, ONE)
_theorem3("T3-b", Parity.M_EVEN,
          "2 sum_1^t atan(F(m)/F(2n+m-1)) = sum_1^m atan(2/L(2n-1)) - sum_1^m atan(L(m)/L(2n+2t+m-1))"
          " - sum_{t+1}^{t+m} atan(F(m)/F(2n+m-1))",
          F, L, ONE)
_theorem3("T3-c", Parity.NONE,
          "2 sum_1^t (-1)^(n-1) atan(F(m)/F(2n+m-1)) = sum_1^m (-1)^(n-1) atan(2/L(2n-1))"
          " + (-1)^(t-1) sum_1^m (-1)^(n-1) atan(L(m)/L(2n+2t+m-1))"
          " - sum_{t+1}^{t+m} (-1)^(n-1) atan(F(m)/F(2n+m-1))",
          F, L, ALT)

# ---------------------------------------------------------------------------
# Infinite identities: n-th left-hand term and closed form.

_TERMS: Dict[str, Callable[[Optional[int], int], ArctanTerm]] = {}
_CLOSED: Dict[str, Callable[[Optional[int]], ClosedForm]] = {}


def _infinite(info: IdentityInfo, term, closed):
    _INFO[info.id] = info
    _TERMS[info.id] = term
    _CLOSED[info.id] = closed


_infinite(IdentityInfo("I-E4", Arity.NONE, Parity.NONE, Kind.INFINITE,
                       "sum_1^inf (-1)^(n+1) atan(1/F(2n)) = atan(1/phi)", alternating=True),
          lambda m, n: _term(_s(n), 1, F(2 * n)),
          lambda m: GoldenArctan())
_infinite(IdentityInfo("I-E6", Arity.NONE, Parity.NONE, Kind.INFINITE,
                       "2 sum_1^inf atan(1/L(2n)) = atan(2)"),
          lambda m, n: _term(2, 1, L(2 * n)),
          lambda m: RationalAngles(AngleSum([_term(1, 2, 1)])))
_infinite(IdentityInfo("I-E7", Arity.NONE, Parity.NONE, Kind.INFINITE,
                       "sum_1^inf atan(1/F(2n+1)) = pi/4"),
          lambda m, n: _term(1, 1, F(2 * n + 1)),
          lambda m: PiQuarter())


def _rational_sum(weight, p, q):
    return lambda m: RationalAngles(_sum(weight, lambda n: p(m), lambda n: q(m, n), 1, m))


_infinite(IdentityInfo("C1-a", Arity.M, Parity.M_EVEN, Kind.INFINITE,
                       "sum_1^inf atan(F(2m)/F(2n+2m-1)) = sum_1^m atan(L(m)/L(2n+m-1))"),
          lambda m, n: ArctanTerm(1, _F2m_over(m, n)),
          _rational_sum(ONE, L, lambda m, n: L(2 * n + m - 1)))
_infinite(IdentityInfo("C1-b", Arity.M, Parity.M_ODD, Kind.INFINITE,
                       "sum_1^inf atan(F(2m)/F(2n+2m-1)) = sum_1^m atan(F(m)/F(2n+m-1))"),
          lambda m, n: ArctanTerm(1, _F2m_over(m, n)),
          _rational_sum(ONE, F, lambda m, n: F(2 * n + m - 1)))
_infinite(IdentityInfo("C1-c", Arity.M, Parity.M_ODD, Kind.INFINITE,
                       "sum_1^inf atan(L(m)^2 L(2n+2m)/(5F(2n+2m)^2)) = sum_1^m atan(L(m)/L(2n+m))"),
          lambda m, n: ArctanTerm(1, _L_sq(m, n)),
          _rational_sum(ONE, L, lambda m, n: L(2 * n + m)))
_infinite(IdentityInfo("C1-d", Arity.M, Parity.M_EVEN, Kind.INFINITE,
                       "sum_1^inf atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_1^m atan(F(m)/F(2n+m))"),
          lambda m, n: ArctanTerm(1, _F_sq(m, n)),
          _rational_sum(ONE, F, lambda m, n: F(2 * n + m)))
_infinite(IdentityInfo("C2-a", Arity.M, Parity.NONE, Kind.INFINITE,
                       "sum_1^inf (-1)^(n-1) atan(F(2m)/F(2n+2m-1)) = sum_1^m (-1)^(n-1) atan(L(m)/L(2n+m-1))",
                       alternating=True),
          lambda m, n: ArctanTerm(_s(n), _F2m_over(m, n)),
          _rational_sum(ALT, L, lambda m, n: L(2 * n + m - 1)))
_infinite(IdentityInfo("C2-b", Arity.M, Parity.NONE, Kind.INFINITE,
                       "sum_1^inf (-1)^(n-1) atan(F(m)^2 L(2n+2m)/F(2n+2m)^2) = sum_1^m (-1)^(n-1) atan(F(m)/F(2n+m))",
                       alternating=True),
          lambda m, n: ArctanTerm(_s(n), _F_sq(m, n)),
          _rational_sum(ALT, F, lambda m, n: F(2 * n + m)))
_infinite(IdentityInfo("C3-a", Arity.M, Parity.M_ODD, Kind.INFINITE,
                       "2 sum_1^inf atan(L(m)/L(2n+m-1)) = sum_1^m atan(2/L(2n-1))"),
          lambda m, n: _term(2, L(m), L(2 * n + m - 1)),
          lambda m: RationalAngles(_two_over_L(ONE)(m)))
_infinite(IdentityInfo("C3-b", Arity.M, Parity.M_EVEN, Kind.INFINITE,
                       "2 sum_1^inf atan(F(m)/F(2n+m-1)) = sum_1^m atan(2/L(2n-1))"),
          lambda m, n: _term(2, F(m), F(2 * n + m - 1)),
          lambda m: RationalAngles(_two_over_L(ONE)(m)))
_infinite(IdentityInfo("C3-c", Arity.M, Parity.NONE, Kind.INFINITE,
                       "2 sum_1^inf (-1)^(n-1) atan(F(m)/F(2n+m-1)) = sum_1^m (-1)^(n-1) atan(2/L(2n-1))",
                       alternating=True),
          lambda m, n: _term(2 * _s(n), F(m), F(2 * n + m - 1)),
          lambda m: RationalAngles(_two_over_L(ALT)(m)))

# ---------------------------------------------------------------------------
# Public operations

_CANONICAL = {key.upper(): key for key in _INFO}

# Test-only hook: when set, build_finite passes every instance through it.
_perturbation: Optional[Callable[[IdentityInstance], IdentityInstance]] = None


def list_identities() -> List[IdentityInfo]:
    """All catalog entries in a stable order: finite ids, then infinite ids."""
    finite = [i for i in _INFO.values() if i.kind is Kind.FINITE]
    infinite = [i for i in _INFO.values() if i.kind is Kind.INFINITE]
    return finite + infinite


def identity_info(identity: str) -> IdentityInfo:
    try:
        return _INFO[_CANONICAL[str(identity).upper()]]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {identity!r}") from None


def admissible_m(info: IdentityInfo, m: int) -> bool:
    return info.admits_m(m)


def _check_m(info: IdentityInfo, m) -> None:
    if m is None:
        raise ArityError(f"{info.id} needs m")
    if m < 0:
        raise ParityError(f"{info.id} needs m >= 0, got {m}")
    if not info.parity.admits(m, 0):
        raise ParityError(f"{info.id} requires {info.parity.value}; got m={m}")
    if m < info.min_m:
        raise ParityError(f"{info.id} requires m >= {info.min_m}; got m={m}")


def build_finite(identity: str, m: Optional[int] = None, t: Optional[int] = None, *,
                 n: Optional[int] = None) -> IdentityInstance:
    """Render both sides of a finite identity as angle sums.

    For ``L1-*`` and ``E33`` the index ``n`` may be passed as ``n=`` or in
    the ``t`` slot.
    """
    info = identity_info(identity)
    if info.kind is not Kind.FINITE:
        raise ArityError(f"{info.id} is an infinite identity; use term_generator/closed_form")
    if info.arity is Arity.M_N:
        if n is not None and t is not None and n != t:
            raise ArityError(f"{info.id} takes a single index n")
        n = n if n is not None else t
        if n is None:
            raise ArityError(f"{info.id} needs n")
        _check_m(info, m)
        if n < 1:
            raise DomainError(f"{info.id} needs n >= 1 (n = {n} puts a zero in a denominator)")
        second = n
    else:
        if n is not None:
            raise ArityError(f"{info.id} does not take n")
        if t is None:
            raise ArityError(f"{info.id} needs t")
        if t < 0:
            raise ArityError(f"{info.id} needs t >= 0, got {t}")
        if info.arity is Arity.T:
            if m is not None:
                raise ArityError(f"{info.id} does not take m")
        else:
            _check_m(info, m)
        second = t
    lhs, rhs = _FINITE[info.id](m, second)
    instance = IdentityInstance(info.id, m, second, lhs, rhs)
    if _perturbation is not None:
        instance = _perturbation(instance)
    return instance


def verify_instance(instance: IdentityInstance) -> FiniteReport:
    start = time.perf_counter()
    reduced = reduce_angle(instance.lhs - instance.rhs)
    elapsed = (time.perf_counter() - start) * 1000.0
    return FiniteReport(
        id=instance.id, m=instance.m, t=instance.t,
        status="verified" if reduced.is_zero else "falsified",
        gaussian=reduced.z, pi_multiple=reduced.k,
        lhs=instance.lhs, rhs=instance.rhs, elapsed_ms=elapsed)


def verify_finite(identity: str, m: Optional[int] = None, t: Optional[int] = None, *,
                  n: Optional[int] = None) -> FiniteReport:
    """Decide a finite identity exactly; ``verified`` iff both sides are equal."""
    return verify_instance(build_finite(identity, m, t, n=n))


def _infinite_info(identity: str, m) -> IdentityInfo:
    info = identity_info(identity)
    if info.kind is not Kind.INFINITE:
        raise ArityError(f"{info.id} is a finite identity; use build_finite")
    if info.arity is Arity.M:
        _check_m(info, m)
    elif m is not None:
        raise ArityError(f"{info.id} does not take m")
    return info


def term_generator(identity: str, m: Optional[int] = None) -> Callable[[int], ArctanTerm]:
    """Function ``n -> n``-th left-hand summand (``n >= 1``), sign and factor included."""
    info = _infinite_info(identity, m)
    fn = _TERMS[info.id]

    def term(n: int) -> ArctanTerm:
        if n < 1:
            raise DomainError("series terms are indexed from n = 1")
        return fn(m, n)
    return term


def closed_form(identity: str, m: Optional[int] = None) -> ClosedForm:
    info = _infinite_info(identity, m)
    return _CLOSED[info.id](m)


def perturb(instance: IdentityInstance, side: str, index: int) -> IdentityInstance:
    """Replace one argument ``p/q`` by ``(p+1)/q``; for falsification tests."""
    sums = {"lhs": instance.lhs, "rhs": instance.rhs}
    terms = list(sums[side])
    old = terms[index]
    arg = old.arg
    terms[index] = ArctanTerm(old.coeff, Fraction(arg.numerator + 1, arg.denominator))
    return replace(instance, **{side: AngleSum(terms)})
