"""Midpoint-radius balls over dyadic fixed point, and certified arctangents.

A :class:`CertifiedReal` is the closed interval
``[(mid - rad) / 2**prec, (mid + rad) / 2**prec]`` with integer ``mid`` and
non-negative integer ``rad``.  Every operation rounds outward, so the exact
value is never lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Union

__all__ = [
    "CertifiedReal",
    "atan_rational",
    "atan_ball",
    "pi_quarter",
    "pi_ball",
    "sqrt5",
]

Number = Union[int, Fraction]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class CertifiedReal:
    mid: int
    rad: int
    prec: int

    def __post_init__(self):
        if self.rad < 0:
            raise ValueError("radius must be non-negative")

    @classmethod
    def exact(cls, value: Number, prec: int = 0) -> "CertifiedReal":
        """Smallest ball at ``prec`` bits around a rational value."""
        value = Fraction(value)
        scaled = value * (1 << prec) if prec >= 0 else value / (1 << -prec)
        mid = round(scaled)
        rad = 0 if mid == scaled else 1
        return cls(mid, rad, prec)

    @classmethod
    def from_bounds(cls, lo: Fraction, hi: Fraction, prec: int) -> "CertifiedReal":
        """A ball at ``prec`` bits that contains ``[lo, hi]``."""
        scale = 1 << prec
        a = (Fraction(lo) * scale).__floor__()
        b = (Fraction(hi) * scale).__ceil__()
        mid = (a + b) // 2
        return cls(mid, max(mid - a, b - mid), prec)

    # exact views

    @property
    def midpoint(self) -> Fraction:
        return Fraction(self.mid, 1 << self.prec)

    @property
    def radius(self) -> Fraction:
        return Fraction(self.rad, 1 << self.prec)

    @property
    def lower(self) -> Fraction:
        return Fraction(self.mid - self.rad, 1 << self.prec)

    @property
    def upper(self) -> Fraction:
        return Fraction(self.mid + self.rad, 1 << self.prec)

    def contains(self, other: Union["CertifiedReal", Number]) -> bool:
        if isinstance(other, CertifiedReal):
            return self.lower <= other.lower and other.upper <= self.upper
        return self.lower <= other <= self.upper

    def overlaps(self, other: "CertifiedReal") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    # arithmetic

    def at(self, prec: int) -> "CertifiedReal":
        """Re-express at ``prec`` bits, widening when precision drops."""
        if prec >= self.prec:
            shift = prec - self.prec
            return CertifiedReal(self.mid << shift, self.rad << shift, prec)
        shift = self.prec - prec
        mid = self.mid >> shift
        # mid was truncated by < 1 ulp; the radius absorbs it.
        return CertifiedReal(mid, _ceil_div(self.rad, 1 << shift) + 1, prec)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CertifiedReal.exact(other, self.prec)
        if not isinstance(other, CertifiedReal):
            return NotImplemented
        p = max(self.prec, other.prec)
        a, b = self.at(p), other.at(p)
        return CertifiedReal(a.mid + b.mid, a.rad + b.rad, p)

    __radd__ = __add__

    def __neg__(self):
        return CertifiedReal(-self.mid, self.rad, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return CertifiedReal(self.mid * k, self.rad * abs(k), self.prec)

    __rmul__ = __mul__

    def widen(self, amount: Number) -> "CertifiedReal":
        """Grow the radius by a non-negative rational amount."""
        extra = (Fraction(amount) * (1 << self.prec)).__ceil__()
        return CertifiedReal(self.mid, self.rad + extra, self.prec)

    def half(self) -> "CertifiedReal":
        return CertifiedReal(self.mid, self.rad, self.prec + 1)

    def to_decimal(self, digits: int) -> str:
        """Midpoint as a decimal string with ``digits`` fractional digits."""
        q = self.midpoint * 10**digits
        n = round(q)
        sign = "-" if n < 0 else ""
        n = abs(n)
        whole, frac = divmod(n, 10**digits)
        if digits == 0:
            return f"{sign}{whole}"
        return f"{sign}{whole}.{frac:0{digits}d}"

    def radius_string(self) -> str:
        """Upper bound on the radius, two significant digits, scientific."""
        r = self.radius
        if r == 0:
            return "0"
        e = 0
        while r * Fraction(10) ** (-e) >= 100:
            e += 1
        while r * Fraction(10) ** (-e) < 10:
            e -= 1
        m = (r * Fraction(10) ** (-e)).__ceil__()
        if m == 100:
            m, e = 10, e + 1
        return f"{m // 10}.{m % 10}e{e + 1:+d}"

    def __repr__(self):
        return f"CertifiedReal({self.to_decimal(20)} +/- {self.radius_string()})"


def _guard(prec: int) -> int:
    return (2 * prec + 64).bit_length() + 3


def _atan_le_one(p: int, q: int, prec: int) -> CertifiedReal:
    """arctan(p/q) for 0 <= p <= q, q > 0, radius <= 2**-prec.

    Euler's series
        atan(x) = sum_k  (2^(2k) (k!)^2 / (2k+1)!) * x^(2k+1) / (1+x^2)^(k+1)
    has term ratio (2k)/(2k+1) * x^2/(1+x^2) <= 1/2 on [0, 1].
    """
    if p == 0:
        return CertifiedReal(0, 0, prec)
    wp = prec + _guard(prec)
    s = p * p + q * q
    pp = p * p
    term = (p * q << wp) // s
    total = 0
    k = 0
    while term:
        total += term
        k += 1
        term = term * (2 * k) * pp // ((2 * k + 1) * s)
    # Each truncated term is low by < 2 ulps and the omitted tail is < 4 ulps,
    # so the true sum lies in [total, total + 2k + 4).
    ball = CertifiedReal(total + k + 2, k + 2, wp)
    return ball


@lru_cache(maxsize=1 << 16)
def _atan_cached(p: int, q: int, prec: int) -> CertifiedReal:
    if p <= q:
        return _atan_le_one(p, q, prec)
    # atan(x) = pi/2 - atan(1/x) for x > 1
    return 2 * pi_quarter(prec + 2) - _atan_le_one(q, p, prec + 1)


def atan_rational(x: Number, prec: int) -> CertifiedReal:
    """Certified ``arctan(x)`` for rational ``x`` with radius <= 2**-prec."""
    x = Fraction(x)
    if x < 0:
        return -_atan_cached(-x.numerator, x.denominator, prec)
    return _atan_cached(x.numerator, x.denominator, prec)


def atan_ball(x: CertifiedReal, prec: int) -> CertifiedReal:
    """Certified arctan over a ball; arctan is 1-Lipschitz."""
    return atan_rational(x.midpoint, prec + 1).widen(x.radius)


@lru_cache(maxsize=64)
def pi_quarter(prec: int) -> CertifiedReal:
    """Ball containing pi/4 with radius <= 2**-prec (Machin's formula)."""
    wp = prec + 5
    return 4 * _atan_le_one(1, 5, wp) - _atan_le_one(1, 239, wp)


def pi_ball(prec: int) -> CertifiedReal:
    return 4 * pi_quarter(prec + 2)


def sqrt5(prec: int) -> CertifiedReal:
    """Ball containing sqrt(5) from an integer square root."""
    s = isqrt(5 << (2 * prec))
    # s <= sqrt(5) * 2**prec < s + 1
    return CertifiedReal(2 * s + 1, 1, prec + 1)
