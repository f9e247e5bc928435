"""Exception hierarchy shared by every gammamorphic module."""


class GammamorphicError(Exception):
    """Base class for all errors raised by gammamorphic."""
    pass


class DomainError(GammamorphicError, ValueError):
    """Argument outside the domain of the requested function or route."""
    pass


class PoleError(DomainError):
    """Argument hits a pole (Γ, ψ and ζ at their singular points)."""
    pass


class ZeroError(DomainError):
    """Argument hits a zero of a function evaluated in ln-space."""
    pass


class RouteDomainError(DomainError):
    """The explicitly requested route cannot handle this argument."""
    pass


class DivergentSeries(DomainError):
    """Series evaluated outside its disk or half-line of convergence."""
    pass


class NonConvergence(GammamorphicError, ArithmeticError):
    """
    Iterative refinement stalled.

    The last estimate and its error are kept so callers can inspect
    how far the refinement got.
    """

    def __init__(self, msg, estimate=None, abs_error=None):
        super().__init__(msg)
        self.estimate = estimate
        self.abs_error = abs_error


class NoisyFunction(NonConvergence):
    """Richardson tableau of a finite-difference derivative diverged."""
    pass


class SingularIntegrand(GammamorphicError, ArithmeticError):
    """Integrand returned a non-finite value at a node away from the endpoint."""
    pass


class OracleOverflow(GammamorphicError, OverflowError):
    """Exact oracle asked for an argument beyond its cap."""
    pass
