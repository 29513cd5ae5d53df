"""Exception types shared across the package."""


class DegenerateStateError(ValueError):
    """A zero-norm amplitude vector or ket was given where a state is required."""


class StratumError(ValueError):
    """An operation was applied to a state from the wrong entanglement stratum."""


class ChartDomainError(ValueError):
    """A base point lies outside the coordinate domain of the requested chart."""
