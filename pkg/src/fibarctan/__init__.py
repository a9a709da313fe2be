"""Exact and certified verification of arctangent identities over Fibonacci
and Lucas numbers."""

from .angle import (
    AngleSum,
    ArctanTerm,
    GaussianInt,
    ReducedAngle,
    arctan_combine,
    atan,
    certified_value,
    equals,
    gaussian_product,
    is_zero,
    make_rational,
    reduce_angle,
)
from .ball import CertifiedReal
from .catalog import (
    build_finite,
    closed_form,
    list_identities,
    term_generator,
    verify_finite,
)
from .errors import (
    ArityError,
    DomainError,
    FibArctanError,
    ParityError,
    PoleError,
    PrecisionCapError,
    UnknownIdentityError,
    UsageError,
    ZeroDenominatorError,
)
from .fib import AlgebraicFamily, check_algebraic_identity, fib, lucas
from .series import golden_arctan, pi_quarter, tail_bound, verify_infinite
from .telescope import double_shift, double_shift_alt, telescope_alt, telescope_diff

__version__ = "0.1.0"
