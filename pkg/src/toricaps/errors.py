"""Exception hierarchy shared by the toricaps modules."""


class ToricapsError(Exception):
    """Base class for every error raised by this package."""


class InvalidDomainError(ToricapsError, ValueError):
    """The moment domain is empty, degenerate, or violates a precondition."""


class DegenerateDomainError(InvalidDomainError):
    """The polytope has zero area."""


class InvalidArgumentError(ToricapsError, ValueError):
    """A scalar or vector argument is out of range."""


class UnsupportedDomainError(ToricapsError):
    """The fast solver does not apply to this domain (e.g. not strongly convex)."""


class UnsupportedFanError(ToricapsError):
    """The operation needs a smooth (or strongly convex) fan."""


class NotMovableError(ToricapsError):
    """A curve class is not a nonnegative combination of cocharacter classes."""


class SearchBudgetExceeded(ToricapsError):
    """The brute-force search box is larger than the configured budget."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound
