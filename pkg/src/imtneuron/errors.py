"""Exception types shared across the package."""


class ImtNeuronError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(ImtNeuronError):
    """Malformed, inconsistent or unknown configuration input."""


class DomainError(ImtNeuronError):
    """Argument outside the mathematical domain of an operation."""


class OrderingError(ImtNeuronError):
    """Start point is not below the absorbing boundary."""


class DegenerateLoadLine(ImtNeuronError):
    """Load line parallel to a device V-I branch; no fixed point exists."""


class NoBifurcationInRange(ImtNeuronError):
    """Oscillatory status identical at both ends of the search interval."""


class SaturationViolated(ImtNeuronError):
    """Series transistor would leave saturation during the discharge."""


class SeriesDidNotConverge(ImtNeuronError):
    """Series truncation rule not satisfied within the term budget."""


class MomentTableTooShort(ImtNeuronError):
    """Series needs boundary moments beyond the available table."""


class NegativeVarianceComputed(ImtNeuronError):
    """Second moment below squared mean; series precision failure."""


class OrderTooHigh(ImtNeuronError):
    """Requested moment order beyond the configured cap."""


class InsufficientData(ImtNeuronError):
    """Not enough samples to fit a distribution."""


class DegenerateVariance(ImtNeuronError):
    """Sample variance is zero; a spread parameter cannot be fitted."""


class InsufficientSamples(ImtNeuronError):
    """Not enough interspike intervals for a statistical estimate."""


class NumericalBlowup(ImtNeuronError):
    """Simulated state left the physical range; time step too large."""
