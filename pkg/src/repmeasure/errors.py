"""Exception hierarchy shared by all modules."""


class RepMeasureError(Exception):
    """Base class for every error raised by this package."""


class RangeError(RepMeasureError, IndexError):
    """A position lies outside the addressable range of a text."""


class SizeError(RepMeasureError):
    """An input is too short, or too long for a capped stage."""

    def __init__(self, message, stage=None, cap=None):
        super().__init__(message)
        self.stage = stage
        self.cap = cap


class ParameterError(RepMeasureError, ValueError):
    """A numeric parameter is out of its admissible range."""


class InvalidOccurrenceError(RepMeasureError, ValueError):
    """A positioned substring does not satisfy an operation's precondition."""


class ClassificationError(RepMeasureError, ValueError):
    """A split or witness index lies outside its occurrence interval."""


class CompatibilityError(RepMeasureError, ValueError):
    """Two periodic extensions are not equal up to cyclic rotation."""
