"""Exception hierarchy.

Every domain error derives from :class:`PathLatticeError`; the CLI maps those
to exit status 1 and :class:`GraphFormatError` to exit status 2.
"""

from __future__ import annotations


class PathLatticeError(Exception):
    """Base class for all domain errors raised by this package."""


class GraphFormatError(PathLatticeError):
    """Malformed graph, path, family or weights text."""


# embed
class InvalidEmbedding(PathLatticeError):
    pass


class MissingRotationEntry(InvalidEmbedding):
    pass


class DisconnectedGraph(InvalidEmbedding):
    pass


class EulerViolation(InvalidEmbedding):
    pass


class OuterFaceNotIncidentToSink(InvalidEmbedding):
    pass


class NotASimpleCycle(PathLatticeError):
    pass


# circulation
class RepeatedEdge(PathLatticeError):
    pass


class InfiniteFaceBoundaryRequested(PathLatticeError):
    pass


class NotACirculation(PathLatticeError):
    pass


class DisconnectedSubgraph(PathLatticeError):
    pass


# lattice
class NotAPath(PathLatticeError):
    pass


class NotStPlanarEmbedding(PathLatticeError):
    pass


class NotAUnitFlow(PathLatticeError):
    pass


class LatticeInvariantError(PathLatticeError):
    """A postcondition that the theory guarantees did not hold."""


# flow
class NegativeCapacity(PathLatticeError):
    pass


class NegativeWeight(PathLatticeError):
    pass


class ResidualPathExists(PathLatticeError):
    pass


class InstanceTooLarge(PathLatticeError):
    pass


# verify
class TooManyPaths(PathLatticeError):
    pass


class NoUniqueExtremum(PathLatticeError):
    pass


class FamilyTooLarge(PathLatticeError):
    pass
