"""Exact Fibonacci and Lucas numbers for any integer index.

Sequential sweeps extend a contiguous cache linearly; isolated large indices
are served by fast doubling so they never force a linear fill.  Negative
indices go through the reflection rules

    F(-n) = (-1)**(n-1) * F(n),    L(-n) = (-1)**n * L(n).
"""

from __future__ import annotations

import threading
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from .errors import ParityError, UnknownIdentityError

__all__ = [
    "SequenceCache",
    "fib",
    "lucas",
    "fib_pair_doubling",
    "default_cache",
    "AlgebraicFamily",
    "Parity",
    "check_algebraic_identity",
    "algebraic_sides",
]

# How far past the contiguous end a request may be before we switch from
# linear extension to fast doubling.
LINEAR_REACH = 256


def fib_pair_doubling(n: int) -> Tuple[int, int]:
    """Return ``(F(n), F(n+1))`` for ``n >= 0`` in O(log n) multiplications."""
    if n < 0:
        raise ValueError("fast doubling needs n >= 0")
    a, b = 0, 1
    for bit in bin(n)[2:]:
        # F(2k) = F(k) * (2F(k+1) - F(k)),  F(2k+1) = F(k)^2 + F(k+1)^2
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


class SequenceCache:
    """Thread-safe store of F and L values at non-negative indices.

    ``fib_values[i]`` and ``lucas_values[i]`` hold the contiguous prefix
    ``0 <= i < len``; ``sparse`` keeps isolated indices computed by doubling.
    With ``enabled=False`` nothing is stored and every call recomputes.
    """

    def __init__(self, enabled: bool = True) -> None:
        self.enabled = enabled
        self._lock = threading.Lock()
        self.clear()

    def clear(self) -> None:
        with self._lock:
            self.fib_values: List[int] = [0, 1]
            self.lucas_values: List[int] = [2, 1]
            self.sparse: Dict[int, Tuple[int, int]] = {}

    @property
    def contiguous_range(self) -> Tuple[int, int]:
        """Inclusive range of indices held in the contiguous prefix."""
        return 0, len(self.fib_values) - 1

    def _extend_to(self, n: int) -> None:
        fv, lv = self.fib_values, self.lucas_values
        while len(fv) <= n:
            fv.append(fv[-1] + fv[-2])
            lv.append(lv[-1] + lv[-2])

    def pair(self, n: int) -> Tuple[int, int]:
        """Return ``(F(n), L(n))`` for ``n >= 0``."""
        if not self.enabled:
            return _pair_uncached(n)
        fv = self.fib_values
        if n < len(fv):
            return fv[n], self.lucas_values[n]
        with self._lock:
            if n < len(self.fib_values):
                return self.fib_values[n], self.lucas_values[n]
            if n - len(self.fib_values) < LINEAR_REACH:
                self._extend_to(n)
                return self.fib_values[n], self.lucas_values[n]
            hit = self.sparse.get(n)
            if hit is None:
                hit = self.sparse[n] = _pair_uncached(n)
            return hit


def _pair_uncached(n: int) -> Tuple[int, int]:
    f, f1 = fib_pair_doubling(n)
    return f, 2 * f1 - f


default_cache = SequenceCache()


def fib(n: int, cache: Optional[SequenceCache] = None) -> int:
    """Return the Fibonacci number ``F(n)`` for any integer ``n``."""
    cache = default_cache if cache is None else cache
    if n >= 0:
        return cache.pair(n)[0]
    value = cache.pair(-n)[0]
    return value if (-n) % 2 == 1 else -value


def lucas(n: int, cache: Optional[SequenceCache] = None) -> int:
    """Return the Lucas number ``L(n)`` for any integer ``n``."""
    cache = default_cache if cache is None else cache
    if n >= 0:
        return cache.pair(n)[1]
    value = cache.pair(-n)[1]
    return value if (-n) % 2 == 0 else -value


class Parity(Enum):
    NONE = "none"
    M_ODD = "m odd"
    M_EVEN = "m even"
    N_ODD = "n odd"
    N_EVEN = "n even"

    def admits(self, m: int, n: int) -> bool:
        if self is Parity.NONE:
            return True
        value = m if self in (Parity.M_ODD, Parity.M_EVEN) else n
        want_odd = self in (Parity.M_ODD, Parity.N_ODD)
        return (value % 2 == 1) == want_odd


F, L = fib, lucas

# Each entry: (parity constraint, formula text, lhs(m, n), rhs(m, n)).
_FAMILIES: Dict[str, Tuple[Parity, str, Callable[[int, int], int], Callable[[int, int], int]]] = {
    "ALG-09": (Parity.NONE, "F(2m) = F(m) L(m)",
               lambda m, n: F(2 * m), lambda m, n: F(m) * L(m)),
    "ALG-10": (Parity.NONE, "F(n) L(m) + L(n) F(m) = 2 F(m+n)",
               lambda m, n: F(n) * L(m) + L(n) * F(m), lambda m, n: 2 * F(m + n)),
    "ALG-11": (Parity.M_ODD, "F(n+2m) - F(n) = L(m) F(n+m)",
               lambda m, n: F(n + 2 * m) - F(n), lambda m, n: L(m) * F(n + m)),
    "ALG-12": (Parity.M_EVEN, "F(n+2m) - F(n) = F(m) L(n+m)",
               lambda m, n: F(n + 2 * m) - F(n), lambda m, n: F(m) * L(n + m)),
    "ALG-13": (Parity.M_ODD, "F(n+2m) + F(n) = F(m) L(n+m)",
               lambda m, n: F(n + 2 * m) + F(n), lambda m, n: F(m) * L(n + m)),
    "ALG-14": (Parity.M_EVEN, "F(n+2m) + F(n) = L(m) F(n+m)",
               lambda m, n: F(n + 2 * m) + F(n), lambda m, n: L(m) * F(n + m)),
    "ALG-15": (Parity.M_ODD, "L(n+2m) - L(n) = L(m) L(n+m)",
               lambda m, n: L(n + 2 * m) - L(n), lambda m, n: L(m) * L(n + m)),
    "ALG-16": (Parity.M_EVEN, "L(n+2m) - L(n) = 5 F(m) F(n+m)",
               lambda m, n: L(n + 2 * m) - L(n), lambda m, n: 5 * F(m) * F(n + m)),
    "ALG-17": (Parity.M_ODD, "L(n+2m) + L(n) = 5 F(m) F(n+m)",
               lambda m, n: L(n + 2 * m) + L(n), lambda m, n: 5 * F(m) * F(n + m)),
    "ALG-18": (Parity.M_EVEN, "L(n+2m) + L(n) = L(m) L(n+m)",
               lambda m, n: L(n + 2 * m) + L(n), lambda m, n: L(m) * L(n + m)),
    "ALG-19": (Parity.N_ODD, "F(n) F(n+2m) = F(n+m)^2 + F(m)^2",
               lambda m, n: F(n) * F(n + 2 * m), lambda m, n: F(n + m) ** 2 + F(m) ** 2),
    "ALG-20": (Parity.N_EVEN, "F(n) F(n+2m) = F(n+m)^2 - F(m)^2",
               lambda m, n: F(n) * F(n + 2 * m), lambda m, n: F(n + m) ** 2 - F(m) ** 2),
    "ALG-21": (Parity.N_ODD, "L(n) L(n+2m) = 5 F(n+m)^2 - L(m)^2",
               lambda m, n: L(n) * L(n + 2 * m), lambda m, n: 5 * F(n + m) ** 2 - L(m) ** 2),
    "ALG-22": (Parity.N_EVEN, "L(n) L(n+2m) = 5 F(n+m)^2 + L(m)^2",
               lambda m, n: L(n) * L(n + 2 * m), lambda m, n: 5 * F(n + m) ** 2 + L(m) ** 2),
}

class AlgebraicFamily(Enum):
    """The fourteen product/sum identities, ALG-09 through ALG-22."""

    ALG_09 = "ALG-09"
    ALG_10 = "ALG-10"
    ALG_11 = "ALG-11"
    ALG_12 = "ALG-12"
    ALG_13 = "ALG-13"
    ALG_14 = "ALG-14"
    ALG_15 = "ALG-15"
    ALG_16 = "ALG-16"
    ALG_17 = "ALG-17"
    ALG_18 = "ALG-18"
    ALG_19 = "ALG-19"
    ALG_20 = "ALG-20"
    ALG_21 = "ALG-21"
    ALG_22 = "ALG-22"

    @property
    def parity(self) -> Parity:
        return _FAMILIES[self.value][0]

    @property
    def formula(self) -> str:
        return _FAMILIES[self.value][1]


def _family(family) -> "AlgebraicFamily":
    if isinstance(family, AlgebraicFamily):
        return family
    try:
        return AlgebraicFamily(str(family).upper())
    except ValueError:
        raise UnknownIdentityError(f"unknown algebraic family {family!r}") from None


def algebraic_sides(family, m: int, n: int) -> Tuple[int, int]:
    """Evaluate both sides of an algebraic family at ``(m, n)``."""
    fam = _family(family)
    parity, formula, lhs, rhs = _FAMILIES[fam.value]
    if m < 0 or n < 0:
        raise ParityError(f"{fam.value} needs m, n >= 0, got m={m}, n={n}")
    if not parity.admits(m, n):
        raise ParityError(f"{fam.value} ({formula}) requires {parity.value}; got m={m}, n={n}")
    return lhs(m, n), rhs(m, n)


def check_algebraic_identity(family, m: int, n: int) -> bool:
    """True iff the family's equality holds exactly at ``(m, n)``.

    Raises:
        ParityError: ``(m, n)`` violates the family's parity constraint.
    """
    lhs, rhs = algebraic_sides(family, m, n)
    return lhs == rhs
