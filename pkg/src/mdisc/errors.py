"""Exception hierarchy shared by the library and the CLI."""


class MdiscError(Exception):
    """Base class for all library errors."""


class RankDeficientError(MdiscError, ValueError):
    pass


class NotFullDimensionalError(MdiscError, ValueError):
    pass


class DimensionMismatchError(MdiscError, ValueError):
    pass


class GenericityError(MdiscError, RuntimeError):
    """No generic weight vector found within the retry budget."""


class DegenerateWeightError(MdiscError, ArithmeticError):
    """A Cramer coordinate vanished exactly for the supplied weight."""


class SizeGateError(MdiscError, ValueError):
    """Instance too large for exhaustive chain enumeration."""


class InstabilityError(MdiscError, RuntimeError):
    pass


class FitError(MdiscError, ValueError):
    pass


class ConfigError(MdiscError, ValueError):
    """Malformed or inconsistent input file."""
