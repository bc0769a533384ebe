"""
Exceptions raised by the RSBF toolkit

Verification failures are reported as verdict objects, not raised. Everything
here signals a caller mistake, an exhausted budget or a broken invariant.
"""

import logging

logger = logging.getLogger(__name__)


class RsbfError(Exception):
    """Base class for every error the toolkit raises on purpose"""

    kind = "error"


class DimensionError(RsbfError, ValueError):
    """n out of range, mismatched dimensions or an invalid shift"""

    kind = "dimension"


class InvalidFunctionError(RsbfError, ValueError):
    """Malformed function input (bad bitstring, wrong length, not rotation invariant)"""

    kind = "invalid_function"


class TheoremScopeError(RsbfError, ValueError):
    """Eigenvalue statements only hold for n > 2"""

    kind = "theorem_scope"


class BudgetExceededError(RsbfError):
    """A configured size budget would be exceeded"""

    kind = "budget"


class ArithmeticOverflowError(RsbfError, OverflowError):
    """A 64-bit accumulation could overflow"""

    kind = "overflow"


class InternalConsistencyError(RsbfError):
    """An exact divisibility or consistency check failed; indicates a bug"""

    kind = "internal"


def check_budget(what: str, n: int, limit: int) -> None:
    """
    Raise BudgetExceededError when n is above limit.

    Args:
        what: Operation name used in the message (e.g. "orbit enumeration")
        n: Requested dimension
        limit: Largest accepted dimension
    """
    if n > limit:
        message = f"{what} for n={n} exceeds budget n<={limit}"
        logger.info(message)
        raise BudgetExceededError(message)
