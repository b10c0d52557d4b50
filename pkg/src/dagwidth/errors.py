"""Exception hierarchy shared by all dagwidth modules."""


class DagWidthError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoop(DagWidthError):
    """An input edge (v, v) was given; self-loops violate acyclicity."""


class CycleDetected(DagWidthError):
    """The input edge set contains a directed cycle."""


class OutOfRange(DagWidthError):
    """An index argument lies outside its valid range."""


class InvalidParameter(DagWidthError):
    """A generator parameter is out of its documented domain."""


class NotACover(DagWidthError):
    """A path set does not cover every vertex, or contains a non-path."""


class InvalidPath(DagWidthError):
    """A vertex sequence is not a path of the graph."""


class InvalidFlow(DagWidthError):
    """A flow violates conservation or an edge demand."""


class BadPathId(DagWidthError):
    """A path id is outside [1, t]."""


class OrderViolation(DagWidthError):
    """A vertex was inserted before one of its in-neighbors."""


class NotMinimum(DagWidthError):
    """A flow or cover assumed minimum still admits a decrementing path."""


class EdgeUncovered(DagWidthError):
    """A splice target uses an edge that lies on no cover path."""


class NotARedCycle(DagWidthError):
    """A cycle handed to the eliminator is not a red cycle of the support."""


class TooLarge(DagWidthError):
    """The instance exceeds the configured brute-force size bound."""


class ParseError(DagWidthError):
    """A text input (edge list, cover file) is malformed."""


class InvariantViolation(DagWidthError):
    """An internal structural invariant failed a debug audit."""
