"""
Error hierarchy for balseg
Every error carries the process exit code the CLI reports for it
"""


class BalsegError(Exception):
    """Base class for all balseg errors"""

    exit_code = 1


class InvalidArgumentError(BalsegError, ValueError):
    """Arguments outside an operation's domain (h > L, bad symbols, ...)"""

    exit_code = 2


class SeriesUndefinedError(InvalidArgumentError):
    """Rational function without a power series expansion at 0"""


class ResourceCapError(BalsegError):
    """Request exceeds the configured enumeration cap"""

    exit_code = 3


class InternalInconsistencyError(BalsegError):
    """A result contradicts an invariant that must hold by construction"""

    exit_code = 4
