"""Exception hierarchy shared by every module."""


class PLSRDError(Exception):
    """Base class for all errors raised by :mod:`plsrd`."""


class InvalidFamilyParams(PLSRDError, ValueError):
    pass


class NotATree(PLSRDError, ValueError):
    pass


class UnsupportedFamily(PLSRDError, ValueError):
    pass


class LengthMismatch(PLSRDError, ValueError):
    pass


class InvalidLabel(PLSRDError, ValueError):
    pass


class GraphFormatError(PLSRDError, ValueError):
    pass


class TooLarge(PLSRDError, ValueError):
    """Input exceeds the hard size guard of an exhaustive routine."""


class TooLargeForExact(TooLarge):
    pass


class NotCubic(PLSRDError, ValueError):
    pass


class MinDegreeTooLow(PLSRDError, ValueError):
    pass


class NotAPacking(PLSRDError, ValueError):
    pass


class InvalidOptions(PLSRDError, ValueError):
    pass


class ConstructionError(PLSRDError, RuntimeError):
    """A constructive labeler produced a labeling that fails validation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
