"""Exception types shared by every module."""


class KostkaError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(KostkaError, ValueError):
    """An argument violates a documented precondition."""


class ResourceLimitError(KostkaError, RuntimeError):
    """A computation exceeded its configured state, face or time budget."""
