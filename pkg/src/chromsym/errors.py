"""Exception types shared across the package."""


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class PoleAtPoint(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


class SizeMismatch(ValueError):
    """Raised when a partition and a content vector have different sizes."""


class DegreeMismatch(ValueError):
    """Raised when symmetric functions of different degrees are combined."""


class SizeLimitExceeded(ValueError):
    """Raised when an enumeration is requested above its configured bound."""


class NotProper(ValueError):
    """Raised when a coloring violates an edge constraint."""


class InvalidFilling(ValueError):
    """Raised when a filling does not satisfy the row/column poset conditions."""


class IsBaseTableau(ValueError):
    """Raised when the peel step is applied to the single-column base tableau."""


class NotFlat(ValueError):
    """Raised when a flat-only reduction step is applied to a non-flat function."""


class NotNonFlat(ValueError):
    """Raised when a non-flat-only reduction step is applied elsewhere."""
