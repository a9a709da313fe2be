"""Finite telescoping and doubling identities over rational sequences.

Every function takes a 1-indexed sequence ``X_1 .. X_len`` (stored as an
ordinary Python sequence, so ``X_n`` is ``x[n - 1]``) and returns both sides
of its identity as exact fractions.  Callers compare them; a mismatch shows
the witness values directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

from .errors import SequenceLengthError

__all__ = [
    "telescope_diff",
    "telescope_alt",
    "double_shift",
    "double_shift_alt",
    "double_shift_chain",
]

Pair = Tuple[Fraction, Fraction]


def _check(x: Sequence, a: int, b: int, names: str) -> None:
    if a < 0 or b < 0:
        raise SequenceLengthError(f"{names} must be non-negative, got {a}, {b}")
    if len(x) < a + b:
        raise SequenceLengthError(
            f"sequence of length {len(x)} is too short for {names} = {a}, {b}")


def _sign(n: int) -> int:
    """(-1)**(n-1)"""
    return 1 if n % 2 == 1 else -1


def _sum(values) -> Fraction:
    return sum(values, Fraction(0))


def telescope_diff(x: Sequence, k: int, m: int) -> Pair:
    """sum_{n=1}^{k} (X_n - X_{n+m})  versus  sum_{n=1}^{m} (X_n - X_{n+k})."""
    _check(x, k, m, "k, m")
    X = lambda n: Fraction(x[n - 1])
    lhs = _sum(X(n) - X(n + m) for n in range(1, k + 1))
    rhs = _sum(X(n) - X(n + k) for n in range(1, m + 1))
    return lhs, rhs


def telescope_alt(x: Sequence, k: int, m: int) -> Pair:
    """Alternating telescoping sum.

    For even ``m`` the summand is ``X_n - X_{n+m}``, for odd ``m`` it is
    ``X_n + X_{n+m}``; in both cases the right side is
    ``sum_{n=1}^{m} (-1)^(n-1) X_n + (-1)^(k-1) sum_{n=1}^{m} (-1)^(n-1) X_{n+k}``.
    """
    _check(x, k, m, "k, m")
    X = lambda n: Fraction(x[n - 1])
    shift_sign = -1 if m % 2 == 0 else 1
    lhs = _sum(_sign(n) * (X(n) + shift_sign * X(n + m)) for n in range(1, k + 1))
    rhs = (_sum(_sign(n) * X(n) for n in range(1, m + 1))
           + _sign(k) * _sum(_sign(n) * X(n + k) for n in range(1, m + 1)))
    return lhs, rhs


def double_shift(x: Sequence, t: int, m: int) -> Pair:
    """2 sum_{n=1}^{t} X_n  versus  its shifted-pair decomposition.

    The right side is
    ``sum_{n=1}^{t} (X_n + X_{n+m}) + sum_{n=1}^{m} X_n - sum_{n=t+1}^{t+m} X_n``.
    """
    _check(x, t, m, "t, m")
    X = lambda n: Fraction(x[n - 1])
    lhs = 2 * _sum(X(n) for n in range(1, t + 1))
    rhs = (_sum(X(n) + X(n + m) for n in range(1, t + 1))
           + _sum(X(n) for n in range(1, m + 1))
           - _sum(X(n) for n in range(t + 1, t + m + 1)))
    return lhs, rhs


def double_shift_alt(x: Sequence, t: int, m: int) -> Pair:
    """Alternating form of :func:`double_shift`.

    Odd ``m`` pairs ``X_n - X_{n+m}``, even ``m`` pairs ``X_n + X_{n+m}``;
    every sum carries the weight ``(-1)^(n-1)``.
    """
    _check(x, t, m, "t, m")
    X = lambda n: Fraction(x[n - 1])
    shift_sign = -1 if m % 2 == 1 else 1
    lhs = 2 * _sum(_sign(n) * X(n) for n in range(1, t + 1))
    rhs = (_sum(_sign(n) * (X(n) + shift_sign * X(n + m)) for n in range(1, t + 1))
           + _sum(_sign(n) * X(n) for n in range(1, m + 1))
           - _sum(_sign(n) * X(n) for n in range(t + 1, t + m + 1)))
    return lhs, rhs


def double_shift_chain(x: Sequence, t: int, m: int) -> Pair:
    """The intermediate step behind :func:`double_shift`.

    ``sum_{n=1}^{t} (X_{n+m} + X_n)`` versus
    ``2 sum_{n=1}^{t} X_n + sum_{n=t+1}^{t+m} X_n - sum_{n=1}^{m} X_n``.
    """
    _check(x, t, m, "t, m")
    X = lambda n: Fraction(x[n - 1])
    lhs = _sum(X(n + m) + X(n) for n in range(1, t + 1))
    rhs = (2 * _sum(X(n) for n in range(1, t + 1))
           + _sum(X(n) for n in range(t + 1, t + m + 1))
           - _sum(X(n) for n in range(1, m + 1)))
    return lhs, rhs
