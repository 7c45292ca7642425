"""Exception hierarchy shared by all modules."""


class LambdaStirlingError(ValueError):
    """Base class for domain errors raised by this package."""


class DegenerateLambda(LambdaStirlingError):
    """Raised when an operation needs lambda != 0 (distinct poles, 1/lambda^k)."""


class PoleHit(LambdaStirlingError):
    """Raised when a rational function is evaluated exactly at one of its poles."""


class ConvergenceDomain(LambdaStirlingError):
    """Raised when a series is evaluated outside its guaranteed convergence region."""


class DomainError(LambdaStirlingError):
    """Raised for parameters outside an integral's domain (a, lambda > 0, k >= 1)."""


class ToleranceNotMet(LambdaStirlingError):
    """Raised when adaptive quadrature cannot certify the requested tolerance."""


class UnknownSuite(LambdaStirlingError):
    """Raised when a verification suite name is not recognised."""
