"""Exception types shared across the package."""


class DanforgeError(ValueError):
    """Base class for validation and usage errors raised by danforge."""


class EmptyDemand(DanforgeError):
    """All input weights are zero, or no entries were given."""


class SelfLoop(DanforgeError):
    """A demand entry connects a node to itself."""


class NoMass(DanforgeError):
    """Requested a conditional distribution at a node with zero marginal."""


class BadBase(DanforgeError):
    """Logarithm base must be > 1."""


class ShapeMismatch(DanforgeError):
    """Demand and network disagree on the node count."""


class NotConnected(DanforgeError):
    """Operation requires a connected graph."""


class BadArity(DanforgeError):
    """Tree arity must be >= 2."""


class WrongFamily(DanforgeError):
    """Demand does not belong to the family the builder requires."""


class ItemNotInTree(DanforgeError):
    """A distribution item is missing from the rooted tree."""


class TooLarge(DanforgeError):
    """Instance exceeds the size limit of an exhaustive oracle."""


class BadSpec(DanforgeError):
    """Invalid generator specification."""
