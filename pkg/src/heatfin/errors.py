"""Exception hierarchy shared by the solvers."""


class HeatfinError(Exception):
    """Base class for numerical failures raised by this package."""


class DomainError(HeatfinError, ValueError):
    """A function was evaluated outside the region where it is defined or finite."""

    def __init__(self, message, x=None):
        super().__init__(message)
        self.x = x


class SingularityError(DomainError):
    """The evaluated expression has a pole or a non-positive base at ``x``."""


class BracketError(HeatfinError, ValueError):
    """No sign change was found where a root was expected."""


class ConvergenceError(HeatfinError, RuntimeError):
    """An iterative method hit its iteration cap."""
