"""Exception hierarchy for exvdw."""


class VdwError(Exception):
    """Base class of every error raised by this package."""


class ValidationError(VdwError, ValueError):
    """A value violates a domain invariant."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class NonPositiveFrequency(ValidationError):
    pass


class NegativeWidth(ValidationError):
    pass


class NonPositiveDipole(ValidationError):
    pass


class InvalidDensity(ValidationError):
    pass


class NonPositiveDensity(ValidationError):
    pass


class NonPositiveTemperature(ValidationError):
    pass


class InvalidGeometry(ValidationError):
    pass


class ZeroSeparation(InvalidGeometry):
    def __init__(self, field="separation", message="must be > 0"):
        super().__init__(field, message)


class ConfigError(VdwError):
    """Problem with a run configuration document."""


class ParseError(ConfigError):
    pass


class SchemaError(ConfigError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class PoleOnAxis(VdwError, ZeroDivisionError):
    """A response pole sits exactly on the real frequency axis."""


class CoherentOnImaginaryAxis(VdwError):
    pass


class NotApplicable(VdwError):
    """Formula requested outside the regime it was derived for."""


class RegulatorTooLarge(VdwError, ValueError):
    pass


class UnknownFigure(VdwError, KeyError):
    pass


class QuadratureNonConvergent(VdwError, ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class BudgetExhausted(QuadratureNonConvergent):
    pass


class NonFiniteIntegrand(QuadratureNonConvergent):
    def __init__(self, abscissa):
        self.abscissa = abscissa
        super().__init__(f"integrand is not finite at {abscissa!r}")
