"""Exception types raised by graphvqe."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ResourceError(RuntimeError):
    """A request would exceed a configured size cap."""


class OptimizerError(RuntimeError):
    """The objective returned a non-finite value.

    The offending parameter vector is kept on ``point``.
    """

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class FitError(ValueError):
    """Least-squares design matrix is rank deficient."""
