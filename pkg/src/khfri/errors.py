"""Exception hierarchy shared by every khfri module."""


class FRIError(Exception):
    """Base class for all khfri errors."""


class NotCNF(FRIError, ValueError):
    """Characteristic points violate a1 <= a2 <= a3 <= a4."""


class OutOfRange(FRIError, ValueError):
    """An alpha level outside [0, 1]."""


class LevelMismatch(FRIError, ValueError):
    """Two alpha-cuts taken at different levels were compared."""


class OrderingError(FRIError, ValueError):
    """Rules and observation are not ordered A1 < A* < A2, B1 < B2."""


class DegenerateRules(FRIError, ArithmeticError):
    """The interpolation denominator vanishes at some alpha level."""

    def __init__(self, message: str, alpha: float | None = None):
        super().__init__(message)
        self.alpha = alpha


class PolynomialFlank(FRIError, ArithmeticError):
    """Flank has c9 = 0, so no hyperbolic component exists."""


class ParseError(FRIError, ValueError):
    """A suite file could not be parsed."""


class SchemaError(FRIError, ValueError):
    """A suite file parsed but violates a domain invariant."""
