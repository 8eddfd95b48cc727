"""Exception hierarchy for the toolkit.

Every domain error is also a ``ValueError`` so callers can catch either.
"""

from enum import Enum


class PrymCuspsError(Exception):
    """Base class for all toolkit errors."""


class InvalidDiscriminantError(PrymCuspsError, ValueError):
    """D is not a positive non-square integer congruent to 0 or 1 mod 4."""

    def __init__(self, D: object, reason: str):
        self.D = D
        self.reason = reason
        super().__init__(f"invalid discriminant {D!r}: {reason}")


class DiscriminantMismatchError(PrymCuspsError, ValueError):
    """Two quadratic-field elements over different discriminants were combined."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"discriminant mismatch: {left} vs {right}")


class InadmissibleLambdaError(PrymCuspsError, ValueError):
    """lambda = (e + sqrt D)/2 requested outside e^2 < D, e = D mod 2."""

    def __init__(self, e: int, D: int):
        self.e = e
        self.D = D
        super().__init__(f"lambda undefined for e={e}, D={D}: need e^2 < D and e = D mod 2")


class PrototypeCondition(str, Enum):
    """Condition of the prototype definition that a tuple can violate."""
    EPS_SIGN = "eps_sign"
    POSITIVITY = "positivity"
    ARITHMETIC = "arithmetic"
    WIDTH_BOUND = "width_bound"
    TWIST_RANGE = "twist_range"
    GCD = "gcd"
    NO_TWIST = "no_twist"


class InvalidPrototypeError(PrymCuspsError, ValueError):
    """A tuple fails the prototype conditions; ``condition`` names the first failure."""

    def __init__(self, condition: PrototypeCondition, message: str):
        self.condition = condition
        super().__init__(f"{condition.value}: {message}")


class OddDiscriminantRequiredError(PrymCuspsError, ValueError):
    """Spin and homology computations are only defined for odd D."""

    def __init__(self, D: int):
        self.D = D
        super().__init__(f"spin machinery requires odd discriminant, got D={D}")
