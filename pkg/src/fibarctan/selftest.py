"""Parameter grids and the built-in self test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple

from .catalog import Arity, IdentityInfo, Kind, list_identities, verify_finite
from .fib import AlgebraicFamily, check_algebraic_identity
from .series import verify_infinite

__all__ = ["Depth", "QUICK", "FULL", "finite_grid", "infinite_ms", "algebraic_grid",
           "SectionResult", "run_selftest"]


@dataclass(frozen=True)
class Depth:
    algebraic: Tuple[int, int]          # m and n range
    lemma_m: Tuple[int, int]
    lemma_n: Tuple[int, int]
    hr_t: Tuple[int, int]
    theorem_m: Tuple[int, int]
    theorem_t: Tuple[int, int]
    infinite_m: Tuple[int, int]
    constant_digits: int                # I-E4, I-E6, I-E7
    corollary_digits: int


QUICK = Depth((0, 16), (0, 8), (1, 8), (0, 8), (0, 4), (0, 8), (0, 4), 20, 20)
FULL = Depth((0, 64), (0, 24), (1, 24), (0, 64), (0, 12), (0, 32), (0, 8), 50, 40)


def _span(r: Tuple[int, int]) -> range:
    return range(r[0], r[1] + 1)


def finite_grid(info: IdentityInfo, depth: Depth) -> List[Tuple[Optional[int], int]]:
    if info.arity is Arity.T:
        return [(None, t) for t in _span(depth.hr_t)]
    if info.arity is Arity.M_N:
        return [(m, n) for m in _span(depth.lemma_m) if info.admits_m(m)
                for n in _span(depth.lemma_n)]
    return [(m, t) for m in _span(depth.theorem_m) if info.admits_m(m)
            for t in _span(depth.theorem_t)]


def infinite_ms(info: IdentityInfo, depth: Depth) -> List[Optional[int]]:
    if info.arity is Arity.NONE:
        return [None]
    return [m for m in _span(depth.infinite_m) if info.admits_m(m)]


def algebraic_grid(family: AlgebraicFamily, m_range, n_range) -> Iterator[Tuple[int, int]]:
    for m in _span(m_range):
        for n in _span(n_range):
            if family.parity.admits(m, n):
                yield m, n


@dataclass
class SectionResult:
    name: str
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def run_selftest(depth: Depth, progress: Optional[Callable[[SectionResult], None]] = None
                 ) -> List[SectionResult]:
    """Run every grid at ``depth``; failures hold the offending reports or tuples."""
    results = []

    def done(section: SectionResult):
        results.append(section)
        if progress:
            progress(section)

    for family in AlgebraicFamily:
        section = SectionResult(f"algebraic {family.value}", 0, [])
        for m, n in algebraic_grid(family, depth.algebraic, depth.algebraic):
            section.checked += 1
            if not check_algebraic_identity(family, m, n):
                section.failures.append((family.value, m, n))
        done(section)

    for info in list_identities():
        section = SectionResult(info.id, 0, [])
        if info.kind is Kind.FINITE:
            for m, second in finite_grid(info, depth):
                section.checked += 1
                report = verify_finite(info.id, m, second)
                if not report.verified:
                    section.failures.append(report)
        else:
            digits = depth.constant_digits if info.arity is Arity.NONE else depth.corollary_digits
            for m in infinite_ms(info, depth):
                section.checked += 1
                report = verify_infinite(info.id, m, digits)
                if not report.verified:
                    section.failures.append(report)
        done(section)
    return results
