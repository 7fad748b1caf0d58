class TwinlabError(Exception):
    """Base class for every error raised by twinlab."""


class ValidationError(TwinlabError, ValueError):
    """Malformed Coxeter matrix, word or system file."""


class ConfigurationError(TwinlabError, ValueError):
    """Bad pipeline configuration or cap override."""


class PreconditionError(TwinlabError, ValueError):
    """An operation was called outside of its domain."""


class CapExceededError(TwinlabError, RuntimeError):
    """
    An enumeration would exceed one of the hard limits in
    :mod:`twinlab.config`. Results are never silently truncated.
    """

    def __init__(self, what, limit, value=None):
        self.what = what
        self.limit = limit
        self.value = value
        if value is None:
            message = '{0} exceeds the cap of {1}'.format(what, limit)
        else:
            message = '{0} = {1} exceeds the cap of {2}'.format(
                what, value, limit)
        super().__init__(message)


class TruncationError(TwinlabError, RuntimeError):
    """A sphere or residue would be cut by the boundary of a ball."""


class InstabilityError(TwinlabError, RuntimeError):
    """Re-running an enumeration at a larger degree bound changed it."""


class LemmaViolation(TwinlabError, AssertionError):
    """A verifier found a counterexample; ``witness`` holds it."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
