"""Exception types shared across the package."""


class TrackPulseError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(TrackPulseError, ValueError):
    """Operand shapes are incompatible with the requested operation."""


class ConfigurationError(TrackPulseError, ValueError):
    """A configuration value is missing, malformed, or out of bounds."""


class EmptyInputError(TrackPulseError, ValueError):
    """An operation that requires data received an empty input."""


class InputTooShortError(DimensionError):
    """Input sequence is shorter than the minimum the operation supports."""


class CacheError(TrackPulseError, RuntimeError):
    """A backward pass received a cache that does not match its forward call."""


class RangeError(TrackPulseError, ValueError):
    """A value lies outside its declared admissible range."""


class AlignmentError(TrackPulseError, ValueError):
    """Signal layout does not line up with the sleeper grid."""


class FormatError(TrackPulseError, ValueError):
    """A binary file is malformed; the message names the offending offset."""


class SimulationError(TrackPulseError, RuntimeError):
    """Time integration produced a non-finite state."""


class EvaluationError(TrackPulseError, RuntimeError):
    """A numeric evaluation produced a non-finite or undefined result."""


class TrainingDiverged(TrackPulseError, RuntimeError):
    """Training loss became non-finite."""

    def __init__(self, epoch: int, message: str):
        super().__init__(message)
        self.epoch = epoch


class CompatibilityError(TrackPulseError, ValueError):
    """Checkpoint and dataset disagree on shapes or architecture."""
