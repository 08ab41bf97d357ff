"""Exception hierarchy shared across the package."""


class WmstError(Exception):
    """Base class for every error raised by this package."""


class InstanceError(WmstError):
    """An instance description failed validation."""


class SelfLoop(InstanceError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(InstanceError):
    """Two edges share the same unordered endpoint pair."""


class DisconnectedGraph(InstanceError):
    """The edge set does not connect all vertices."""


class NonpositiveWeight(InstanceError):
    """A weight is zero or negative; all weights must be positive."""


class MissingWeight(InstanceError):
    """A weight map does not cover the whole edge set."""


class EdgeInTree(WmstError):
    """A cycle query was made for an edge already in the tree."""


class NotSpanning(WmstError):
    """An accepted edge set is not a spanning tree (algorithm bug)."""


class TooLarge(WmstError):
    """An enumeration guard was exceeded."""


class BadParameter(WmstError):
    """A parameter is outside its documented range."""


class InvariantViolation(WmstError):
    """A checked-mode structural invariant failed (implementation bug)."""
