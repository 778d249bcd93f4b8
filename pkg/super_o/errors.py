from __future__ import annotations


class SuperOError(Exception):
    """
    Base class for every error raised by super_o.
    `status` is the short machine-readable tag copied into CLI refusals.
    """

    status: str = "error"


class InvalidParameterError(SuperOError, ValueError):
    status = "invalid-parameter"


class BasisMismatchError(SuperOError, ValueError):
    status = "basis-mismatch"


class NotIntegralError(SuperOError):
    status = "not-integral"


class UnsupportedError(SuperOError):
    status = "unsupported"


class UnsupportedRankError(UnsupportedError):
    status = "unsupported-rank"


class OutOfScopeError(SuperOError):
    status = "out-of-scope"


class PreconditionError(SuperOError):
    status = "precondition"


class ContradictionError(SuperOError):
    status = "contradiction"


class BandViolationError(SuperOError):
    status = "band-violation"


class ResourceCapError(SuperOError):
    status = "resource-cap"


class OracleError(SuperOError):
    """Internal inconsistency inside the oracle (never a user error)."""

    status = "oracle-failure"
