"""Exception hierarchy shared by the library and the CLI."""


class CayleyError(Exception):
    """Base class for every error raised by :mod:`intcayley`."""


class InvalidGroupError(CayleyError, ValueError):
    pass


class ArityError(CayleyError, ValueError):
    pass


class DomainError(CayleyError, ValueError):
    pass


class IncompleteInputError(CayleyError, KeyError):
    pass


class NotCayleySetError(CayleyError, ValueError):
    """The connection set is not closed under negation, or holds the
    identity without loops being allowed."""


class NonIntegralError(CayleyError):
    """A formula that needs a class decomposition was given a set with none.

    ``report`` carries the brute-force spectrum so callers can still show the
    exact (non-integer) eigenvalues.
    """

    def __init__(self, message, report=None, witness=None):
        super().__init__(message)
        self.report = report
        self.witness = witness


class InvariantViolation(CayleyError, AssertionError):
    """Raised when a result contradicts a proven identity; always a bug."""
