"""Exception types raised across the toolkit.

The CLI maps :class:`ValidationError` (bad inputs, bad config) to exit
code 2 and every other :class:`LoadcastError` to exit code 1.
"""


class LoadcastError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(LoadcastError):
    """A parameter or configuration value violates its contract."""


class AlignmentError(LoadcastError):
    """Feature columns could not be joined onto the target grid."""


class SplitError(LoadcastError):
    """A train/test split would leave one side empty or is ill-formed."""


class IngestError(LoadcastError):
    """A CSV file failed parsing or validation."""


class SelectionError(LoadcastError):
    """Feature scoring is undefined for the given inputs."""


class TrainingError(LoadcastError):
    """Model training received non-finite or unusable data."""


class PredictionError(LoadcastError):
    """Prediction inputs do not match the trained model schema."""


class MetricError(LoadcastError):
    """A forecast metric is undefined for the given vectors."""
