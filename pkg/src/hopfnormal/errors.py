"""Exception hierarchy shared by the library and the command line."""


class HopfNormalError(Exception):
    """Base class for all errors raised by this package."""


class SizeLimitError(HopfNormalError):
    """A group or lattice exceeded its configured size cap."""


class HypothesisError(HopfNormalError):
    """Input data does not satisfy the preconditions of an operation."""


class SpecParseError(HopfNormalError):
    """A group spec, element label or instance file could not be parsed."""


class ConsistencyError(HopfNormalError):
    """Two computations that must agree did not; indicates a bug."""
