"""Exception types shared across the package."""


class CoverRegError(Exception):
    """Base class for all package errors."""


class InputError(CoverRegError, ValueError):
    """A caller violated a documented precondition or supplied a malformed input."""


class CapacityError(CoverRegError, RuntimeError):
    """A computation exceeded its configured resource limits.

    Raised instead of silently degrading; the CLI maps this to exit status 3.
    """


class InternalConsistencyError(CoverRegError, RuntimeError):
    """An invariant that should be unconditionally true failed at runtime."""
