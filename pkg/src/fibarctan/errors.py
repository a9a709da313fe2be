"""Exception types shared across the package."""


class FibArctanError(Exception):
    """Base class for every error raised by this package."""


class UsageError(FibArctanError, ValueError):
    """The caller supplied parameters outside an operation's contract."""


class ParityError(UsageError):
    """A parity-constrained identity was asked for a disallowed m or n.

    Raised instead of returning ``False`` so that ``False`` always means the
    identity was falsified.
    """


class ArityError(UsageError):
    """A required parameter is missing or an unexpected one was given."""


class DomainError(UsageError):
    """Parameters would place a zero in a denominator."""


class UnknownIdentityError(UsageError):
    pass


class SequenceLengthError(UsageError):
    pass


class ZeroDenominatorError(FibArctanError, ZeroDivisionError):
    pass


class PoleError(FibArctanError, ZeroDivisionError):
    """The tangent of the combined angle is infinite."""


class PrecisionCapError(FibArctanError, RuntimeError):
    """Branch isolation exceeded the hard precision cap.

    Exact inputs always isolate, so hitting the cap indicates a bug.
    """
