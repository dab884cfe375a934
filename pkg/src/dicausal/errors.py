"""Exception hierarchy shared by all modules."""


class DicausalError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(DicausalError):
    """Invalid configuration value, unknown config key, or bad CLI config."""


class ShapeMismatchError(DicausalError):
    """Tensor arguments do not conform; the message names the offending axis."""


class LabelRangeError(DicausalError):
    """A class label falls outside [0, num_classes)."""


class NonFiniteGradientError(DicausalError):
    """A gradient contains NaN/Inf; the message names the parameter."""


class NumericalError(DicausalError):
    """A training step produced a non-finite loss."""


class CheckpointError(DicausalError):
    """Base class for checkpoint I/O failures."""


class CheckpointMissingError(CheckpointError):
    """Checkpoint file does not exist."""


class CorruptCheckpointError(CheckpointError):
    """Bad magic string, truncated payload, or malformed container."""


class ConfigHashError(CheckpointError):
    """Checkpoint was written for a different model configuration."""


class DataError(DicausalError):
    """Base class for dataset loading/validation failures."""


class DataFormatError(DataError):
    """Malformed manifest or sample file; the message names file and row."""


class EmptySplitError(DataError):
    """A required train/val/test split contains no samples."""


class StratificationError(DataError):
    """A class has too few samples to split with the requested ratios."""


class InsufficientDataError(DataError):
    """Too few samples to fit a per-domain density model."""


class UndefinedMetricError(DicausalError):
    """Forgetting metrics need at least two domains."""
