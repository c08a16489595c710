"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`GaleDesignError`, which is itself a :class:`ValueError` so callers
that only care about bad input can catch that.
"""


class GaleDesignError(ValueError):
    """Base class for all library errors."""


# graphs
class GraphError(GaleDesignError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotRegular(GraphError):
    pass


class NotGenerating(GraphError):
    pass


class NotSymmetricSet(GraphError):
    pass


class UnknownName(GraphError):
    pass


# spectral
class SpectralError(GaleDesignError):
    pass


class ClusterAmbiguity(SpectralError):
    pass


class UnsupportedFamily(SpectralError):
    pass


class BadPermutation(SpectralError):
    pass


class KOutOfRange(SpectralError):
    pass


# polytope
class PolytopeError(GaleDesignError):
    pass


class RankDeficient(PolytopeError):
    pass


class NumericallyDegenerate(PolytopeError):
    pass


# designs
class DesignError(GaleDesignError):
    pass


class NotAFace(DesignError):
    pass


class NotCombinatorial(DesignError):
    pass


class NotStable(DesignError):
    pass


class BudgetExceeded(DesignError):
    pass


# codes
class NoSuchCode(GaleDesignError):
    pass
