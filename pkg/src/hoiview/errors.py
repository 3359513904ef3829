"""Exception types raised by hoiview."""


class HoiViewError(Exception):
    """Base class for all hoiview errors."""


class ParseError(HoiViewError):
    """Malformed tabular input (non-numeric cell, ragged row, bad manifest).

    ``row`` and ``col`` are 0-based coordinates in the file as read,
    counting a header row if one is present; ``col`` is None for
    whole-row problems.
    """

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class EmptyInput(HoiViewError):
    """Input file contains no rows."""


class DegenerateChannel(HoiViewError):
    """A channel has zero sample variance; carries ``channel`` index."""

    def __init__(self, channel, message=None):
        super().__init__(message or f"channel {channel} has zero variance")
        self.channel = channel


class TooFewSamples(HoiViewError):
    """Fewer than two samples; no Gram matrix can be formed."""


class TooFewChannels(HoiViewError):
    """Operation needs more channels than the recording has."""


class ShapeError(HoiViewError):
    """Array arguments have incompatible shapes."""


class NumericalError(HoiViewError):
    """Eigensolver or other numerical routine failed to converge."""


class SingularCovariance(HoiViewError):
    """Covariance (sub)matrix is singular or not positive definite."""


class FormatError(HoiViewError):
    """Serialized view file has a bad magic, version, or dimensions."""
