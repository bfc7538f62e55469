"""Exception hierarchy for the m-cluster geometry toolkit."""

from __future__ import annotations


class MClusterError(Exception):
    """Base class; the CLI reports ``type(err).__name__`` on failure."""


class InvalidLabel(MClusterError):
    pass


class NotMDiagonal(MClusterError):
    pass


class DuplicateArc(MClusterError):
    pass


class CrossingArcs(MClusterError):
    def __init__(self, a, b):
        super().__init__(f"arcs cross: {a} and {b}")
        self.pair = (a, b)


class WrongArcCount(MClusterError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"expected {expected} arcs, got {got}")
        self.expected = expected
        self.got = got


class BadFace(MClusterError):
    def __init__(self, face, size):
        super().__init__(f"region {face} has size {size}")
        self.face = face
        self.size = size


class NotStrip(MClusterError):
    pass


class NotGentle(MClusterError):
    pass


class Disconnected(MClusterError):
    pass


class RootCyclePresent(MClusterError):
    def __init__(self, witness=None):
        super().__init__(f"root cycle present: {witness}")
        self.witness = witness


class BadCutSet(MClusterError):
    pass


class SaturatedCyclePresent(MClusterError):
    pass


class GldimTooLarge(MClusterError):
    pass


class PredicateFails(MClusterError):
    pass


class TheoremViolation(MClusterError):
    """A checked equivalence failed; carries the full witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(MClusterError):
    pass
