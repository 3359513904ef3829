"""Exception types raised by mvib."""


class MvibError(Exception):
    """Base class for all mvib errors."""


class FormatError(MvibError):
    """View file has a bad magic, version, or dimensions."""


class TooFewSamples(MvibError):
    """Batch entropy needs at least two samples."""


class TrainingError(MvibError):
    """Training diverged (non-finite loss)."""
