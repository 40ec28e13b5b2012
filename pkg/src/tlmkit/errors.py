"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter violates a documented constraint (usage error)."""


class GridMismatchError(ParameterError):
    """Operands live on different grids."""


class BandCoverageError(RuntimeError):
    """Spectral energy above the top dyadic band of a multiplier family."""


class QuadratureError(RuntimeError):
    """A quadrature did not converge to the requested tolerance."""


class BaselineError(RuntimeError):
    """Missing, malformed, or conflicting calibration baseline."""
