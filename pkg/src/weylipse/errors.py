"""Exception hierarchy shared by all modules.

Usage errors (bad input shape) and computation errors (valid input, but the
requested object does not exist or exceeds a configured bound) are kept as
separate branches so the CLI can map them to distinct exit codes.
"""


class WeylipseError(Exception):
    """Base class for all library errors."""


class UsageError(WeylipseError):
    """Malformed input: unparseable type string, bad index, wrong dimension."""


class UnknownFamilyError(UsageError):
    pass


class RankOutOfRangeError(UsageError):
    pass


class DimensionMismatchError(UsageError):
    pass


class IndexOutOfRangeError(UsageError):
    pass


class BadIndexSetError(UsageError):
    pass


class ComputationError(WeylipseError):
    """Well-formed request whose answer does not exist or was cut off."""


class NotARootError(ComputationError):
    pass


class NotOnEllipsoidError(ComputationError):
    pass


class NotASolutionError(ComputationError):
    pass


class NotInMainOrbitError(ComputationError):
    pass


class NotAMultipleError(ComputationError):
    """A difference that should be an integer multiple of a root is not."""


class CapExceededError(ComputationError):
    """An enumeration hit its configured size bound; partial results are discarded."""
