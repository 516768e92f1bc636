"""Exception types shared across the package."""


class LifshitzError(Exception):
    """Base class for numerical and configuration failures in this package."""


class QuadratureError(LifshitzError):
    """An adaptive quadrature did not reach the requested tolerance."""


class NoConvergenceError(LifshitzError):
    """A Matsubara sum hit its term cap before the tail criterion was met."""


class MethodDisagreementError(LifshitzError):
    """Two independent computation routes disagree far beyond their error bars."""


class StepSizeError(LifshitzError):
    """A finite-difference stencil is inconsistent with its truncation model."""


class FitError(LifshitzError):
    """A least-squares coefficient fit is too ill-conditioned to trust."""


class ConfigError(LifshitzError):
    """Invalid run configuration (bad key, malformed value, empty sweep...)."""


class DomainError(ValueError):
    """Kernel evaluated outside its mathematical domain (log/branch guards)."""
