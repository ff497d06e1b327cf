"""Exception hierarchy shared by every module in the package."""


class SubsetGraphError(ValueError):
    """Base class for all errors raised by johnson_conn."""


class InvalidParamsError(SubsetGraphError):
    pass


class CapacityError(SubsetGraphError):
    """Ground set larger than the fixed bit-set width."""


class InvalidVertexError(SubsetGraphError):
    pass


class InvalidSwapError(SubsetGraphError):
    pass


class InvalidEntryError(SubsetGraphError):
    pass


class UnsupportedError(SubsetGraphError):
    """Operation not defined for the given parameters."""


class DegenerateGraphError(SubsetGraphError):
    """The graph is a single isolated vertex (n == k)."""


class NotConnectedError(SubsetGraphError):
    pass


class EmptyGraphError(SubsetGraphError):
    pass


class AdjacentTerminalsError(SubsetGraphError):
    pass


class NoVertexCutError(SubsetGraphError):
    """Complete graphs have no vertex cut."""


class InvalidPairError(SubsetGraphError):
    pass


class TooLargeError(SubsetGraphError):
    """Exhaustive enumeration refused because the instance exceeds a guard."""


class InvalidConfigError(SubsetGraphError):
    pass


class UnrealizableCaseError(UnsupportedError):
    """A path-family case needs more fresh entries than the ground set offers."""
