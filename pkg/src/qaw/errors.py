"""Exception taxonomy shared across the package."""


class QawError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(QawError, ValueError):
    """Parameters violate a precondition (zero denominator, bad range, ...)."""


class UnsupportedModeError(QawError, ValueError):
    """Exact mode requested for a quantity that has no exact rational value."""


class DivergenceError(QawError, ArithmeticError):
    """A series or product failed to converge under the truncation policy."""


class AccuracyError(QawError, ArithmeticError):
    """A numeric routine could not certify the requested tolerance."""


class NotCentralError(QawError, ArithmeticError):
    """A registered Casimir did not act as a scalar on the monomial basis."""
