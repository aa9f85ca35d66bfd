"""Exception types raised by the library."""


class WinQueryError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(WinQueryError, ValueError):
    """Events with inconsistent coordinate dimensions, or an index built for the wrong d."""


class EmptyInputError(WinQueryError, ValueError):
    """An event sequence needs at least one event."""


class InvalidIntervalError(WinQueryError, ValueError):
    """Time interval with t1 > t2."""


class OutOfBoundsError(WinQueryError, ValueError):
    """Coordinate outside the quantizer domain."""


class InvalidDirectionError(WinQueryError, ValueError):
    """Zero or degenerate direction vector."""


class NotOnHullError(WinQueryError, ValueError):
    """Gift-wrap pivot is not a vertex of the window's hull."""


class EmptyWindowError(WinQueryError, ValueError):
    """Operation requires a nonempty window."""


class MissingColorError(WinQueryError, ValueError):
    """Color query on a sequence with uncolored points."""


class InvalidParameterError(WinQueryError, ValueError):
    """Nonpositive radius, epsilon, or separation parameter."""


class OrderingError(WinQueryError, ValueError):
    """Input list violates its required sort order."""


class UsageError(WinQueryError, ValueError):
    """Unknown operation name or malformed parameters."""
