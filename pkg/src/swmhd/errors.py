"""Exception types raised by the solver library."""


class SWMHDError(Exception):
    """Base class for all library errors."""


class NonPositiveDepth(SWMHDError, ValueError):
    """A state with fluid depth h <= threshold was passed or produced."""


class BadGridSpec(SWMHDError, ValueError):
    pass


class BoundaryError(SWMHDError, ValueError):
    pass


class GridMismatch(SWMHDError, ValueError):
    pass


class DegenerateTable(SWMHDError, ValueError):
    pass


class ConfigError(SWMHDError, ValueError):
    pass


class IoError(SWMHDError, OSError):
    """An output file could not be written."""
