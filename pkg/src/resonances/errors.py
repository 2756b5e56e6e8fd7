"""Exception hierarchy."""


class ResonanceError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ResonanceError, ValueError):
    """An argument lies outside the domain of the operation."""


class SingularityError(DomainError):
    """A formula is evaluated on its singular locus (e.g. zeta = -1)."""


class DegenerateDenominatorError(SingularityError):
    """The triple-barrier next-to-leading denominator D vanishes."""


class CapabilityError(ResonanceError):
    """The requested expansion order is not available for the model."""


class ConvergenceError(ResonanceError, ArithmeticError):
    """Newton iteration failed; ``result`` holds the last iterate."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class BasinEscapeError(ConvergenceError):
    """Newton left the basin around its seed (likely a neighbouring pole)."""


class EmptyPlotError(ResonanceError, ValueError):
    """No records to plot."""
