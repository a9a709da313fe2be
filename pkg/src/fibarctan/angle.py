"""Exact arithmetic on integer combinations of arctangents of rationals.

``arctan(p/q)`` is the argument of the Gaussian integer ``q + p*i``, so a sum
``sum c_j * arctan(p_j/q_j)`` has the same argument, modulo 2*pi, as the
product ``prod (q_j + p_j*i)**c_j``.  The product settles the angle up to a
multiple of pi; a certified numerical evaluation then pins down that multiple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Tuple, Union

from .ball import CertifiedReal, atan_rational, pi_ball, pi_quarter
from .errors import PoleError, PrecisionCapError, ZeroDenominatorError

__all__ = [
    "Rational",
    "make_rational",
    "arctan_combine",
    "GaussianInt",
    "ArctanTerm",
    "AngleSum",
    "atan",
    "ReducedAngle",
    "gaussian_product",
    "reduce_angle",
    "is_zero",
    "equals",
    "certified_value",
    "certified_arg",
    "START_BITS",
    "MAX_BITS",
]

Rational = Fraction

START_BITS = 64
MAX_BITS = 1 << 20


def make_rational(p: int, q: int) -> Fraction:
    """Reduced fraction ``p/q`` with a positive denominator."""
    if q == 0:
        raise ZeroDenominatorError(f"zero denominator in {p}/0")
    return Fraction(p, q)


def arctan_combine(x, y, mode: str = "add") -> Fraction:
    """Tangent of ``arctan(x) + arctan(y)`` (``mode='add'``) or of the difference.

    Returns ``(x+y)/(1-xy)`` or ``(x-y)/(1+xy)``.  Whether the result is the
    principal arctangent of the combined angle is the caller's business.
    """
    x, y = Fraction(x), Fraction(y)
    if mode == "add":
        den = 1 - x * y
        num = x + y
    elif mode == "sub":
        den = 1 + x * y
        num = x - y
    else:
        raise ValueError(f"mode must be 'add' or 'sub', not {mode!r}")
    if den == 0:
        raise PoleError(f"arctan_combine({x}, {y}, {mode}) has a vertical tangent")
    return num / den


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def primitive(self) -> "GaussianInt":
        g = gcd(self.re, self.im)
        if g <= 1:
            return self
        return GaussianInt(self.re // g, self.im // g)

    def __pow__(self, k: int) -> "GaussianInt":
        if k < 0:
            raise ValueError("use conjugate() for negative powers")
        result, base = GaussianInt(1, 0), self
        while k:
            if k & 1:
                result = (result * base).primitive()
            k >>= 1
            if k:
                base = (base * base).primitive()
        return result


@dataclass(frozen=True)
class ArctanTerm:
    """``coeff * arctan(arg)`` with ``arg >= 0``; signs live in ``coeff``."""

    coeff: int
    arg: Fraction

    def __post_init__(self):
        if self.coeff == 0:
            raise ValueError("ArctanTerm coefficient must be nonzero")
        if not isinstance(self.arg, Fraction):
            object.__setattr__(self, "arg", Fraction(self.arg))
        if self.arg < 0:
            raise ValueError(f"ArctanTerm argument must be >= 0, got {self.arg}")

    def __neg__(self) -> "ArctanTerm":
        return ArctanTerm(-self.coeff, self.arg)

    def factor(self) -> GaussianInt:
        """``(q + p*i)**coeff``, via the conjugate when ``coeff < 0``."""
        z = GaussianInt(self.arg.denominator, self.arg.numerator)
        if self.coeff < 0:
            z = z.conjugate()
        return z ** abs(self.coeff)

    def __str__(self):
        c = self.coeff
        head = "+" if c == 1 else "-" if c == -1 else f"{c:+d}*"
        return f"{head}atan({self.arg})"


def atan(p, q=1, coeff: int = 1) -> ArctanTerm:
    """Shorthand for ``ArctanTerm(coeff, make_rational(p, q))``."""
    return ArctanTerm(coeff, make_rational(p, q))


@dataclass(frozen=True)
class AngleSum:
    """An ordered, finite sum of :class:`ArctanTerm`; empty means zero."""

    terms: Tuple[ArctanTerm, ...] = ()

    def __init__(self, terms: Iterable[ArctanTerm] = ()):
        object.__setattr__(self, "terms", tuple(terms))

    def __iter__(self) -> Iterator[ArctanTerm]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "AngleSum") -> "AngleSum":
        return AngleSum(self.terms + AngleSum._coerce(other).terms)

    def __neg__(self) -> "AngleSum":
        return AngleSum(-t for t in self.terms)

    def __sub__(self, other: "AngleSum") -> "AngleSum":
        return self + (-AngleSum._coerce(other))

    def __rmul__(self, k: int) -> "AngleSum":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return AngleSum()
        return AngleSum(ArctanTerm(t.coeff * k, t.arg) for t in self.terms)

    __mul__ = __rmul__

    @staticmethod
    def _coerce(value) -> "AngleSum":
        if isinstance(value, AngleSum):
            return value
        if isinstance(value, ArctanTerm):
            return AngleSum([value])
        return AngleSum(value)

    def __str__(self):
        return " ".join(map(str, self.terms)) if self.terms else "0"


@dataclass(frozen=True)
class ReducedAngle:
    """The angle ``arg(z) + k*pi`` with ``arg`` in ``(-pi, pi]``."""

    z: GaussianInt
    k: int

    @property
    def is_zero(self) -> bool:
        return self.z == GaussianInt(1, 0) and self.k == 0


def gaussian_product(a: AngleSum) -> GaussianInt:
    """Primitive Gaussian integer whose argument matches ``a`` modulo 2*pi.

    Only the gcd is removed; the sign is kept because flipping it would move
    the argument by pi.
    """
    z = GaussianInt(1, 0)
    for term in AngleSum._coerce(a):
        z = (z * term.factor()).primitive()
    return z


def certified_value(a: AngleSum, precision_bits: int) -> CertifiedReal:
    """Ball around the exact angle with radius <= 2**(1-p) * (1 + len(a))."""
    if precision_bits < 8:
        raise ValueError("precision_bits must be >= 8")
    total = CertifiedReal(0, 0, precision_bits)
    for term in AngleSum._coerce(a):
        if term.arg == 0:
            continue
        bits = precision_bits + abs(term.coeff).bit_length()
        total = total + term.coeff * atan_rational(term.arg, bits)
    return total


def certified_arg(z: GaussianInt, precision_bits: int) -> CertifiedReal:
    """Principal argument of ``z`` in ``(-pi, pi]`` as a ball."""
    re, im = z.re, z.im
    if re == 0 and im == 0:
        raise ValueError("argument of zero is undefined")
    p = precision_bits
    if im == 0:
        return CertifiedReal(0, 0, p) if re > 0 else pi_ball(p)
    if re == 0:
        half_pi = 2 * pi_quarter(p + 1)
        return half_pi if im > 0 else -half_pi
    base = atan_rational(Fraction(abs(im), abs(re)), p + 1)
    if re > 0:
        return base if im > 0 else -base
    # second or third quadrant
    if im > 0:
        return pi_ball(p + 1) - base
    return base - pi_ball(p + 1)


def _isolate_multiple(angle: CertifiedReal, arg: CertifiedReal, pi: CertifiedReal):
    """Integer k with (angle - arg)/pi within 1/4 of k, or None."""
    diff = angle - arg
    lo, hi = diff.lower / pi.upper, diff.upper / pi.lower
    if diff.lower < 0:
        lo = diff.lower / pi.lower
    if diff.upper < 0:
        hi = diff.upper / pi.upper
    k = round((lo + hi) / 2)
    quarter = Fraction(1, 4)
    if k - quarter < lo and hi < k + quarter:
        return k
    return None


def reduce_angle(a: AngleSum, *, start_bits: int = START_BITS,
                 max_bits: int = MAX_BITS) -> ReducedAngle:
    """Canonical exact form ``(z, k)`` of an angle sum."""
    a = AngleSum._coerce(a)
    z = gaussian_product(a)
    bits = start_bits
    while bits <= max_bits:
        k = _isolate_multiple(certified_value(a, bits), certified_arg(z, bits),
                              pi_ball(bits))
        if k is not None:
            return ReducedAngle(z, k)
        bits *= 2
    raise PrecisionCapError(f"could not isolate the pi-multiple within {max_bits} bits")


def is_zero(a: AngleSum) -> bool:
    """True iff the angle sum is exactly zero."""
    return reduce_angle(a).is_zero


def equals(lhs: AngleSum, rhs: AngleSum) -> bool:
    """Exact equality of two angle sums (not merely modulo pi)."""
    return is_zero(AngleSum._coerce(lhs) - AngleSum._coerce(rhs))
