"""Exception hierarchy.

Every error raised by the library derives from :class:`EntcatError`, so
callers (the CLI in particular) can separate input problems from bugs.
"""


class EntcatError(Exception):
    """Base class for all library errors."""


class InvalidVector(EntcatError, ValueError):
    pass


class NegativeComponent(InvalidVector):
    pass


class EmptyVector(InvalidVector):
    pass


class AllZero(InvalidVector):
    pass


class ZeroComponent(InvalidVector):
    pass


class ParseError(InvalidVector):
    pass


class IndexOutOfRange(EntcatError, IndexError):
    pass


class DimensionTooSmall(EntcatError, ValueError):
    pass


class SizeCapExceeded(EntcatError):
    """The requested vector would exceed the configured component cap."""


class TotalMismatch(EntcatError, ValueError):
    pass


class TargetIsZeroVector(EntcatError, ValueError):
    pass


class AlphaOutOfRange(EntcatError, ValueError):
    pass


class InvalidThreshold(EntcatError, ValueError):
    pass


class EmptyKd(EntcatError, ValueError):
    pass


class IntervalEmpty(EntcatError, ValueError):
    pass


class NoCertificate(EntcatError, ValueError):
    pass


class UniformCatalyst(EntcatError, ValueError):
    pass


class UniformTarget(EntcatError, ValueError):
    pass


class InfeasibleWitness(EntcatError, ValueError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PreconditionViolated(EntcatError, ValueError):
    pass


class UnknownSuite(EntcatError, KeyError):
    pass


class InternalInconsistency(EntcatError, AssertionError):
    """Two independent computations that must agree did not."""
