"""Exception hierarchy for timegp."""


class GPError(Exception):
    """Base class for all timegp errors."""


class ConfigurationError(GPError):
    """Invalid experiment or module configuration."""


class EvaluationError(GPError):
    """A genome could not be evaluated (e.g. input index out of range)."""


class UsageError(GPError):
    """An operation was called with arguments violating its contract."""
