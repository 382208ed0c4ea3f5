"""Exception types shared across the package."""


class RelcalcError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RelcalcError):
    """Bad point set, state value, arity, or incompatible domains."""


class FormatError(RelcalcError):
    """Malformed bit table, relation file, or polynomial text."""


class UnsupportedError(RelcalcError):
    """Request outside the supported range (non-prime modulus, oversized table, unknown rule)."""


class ContractError(RelcalcError):
    """A supplied argument violates a documented precondition."""


class DegenerateError(RelcalcError):
    """Empty or trivial relation where the operation is undefined."""
