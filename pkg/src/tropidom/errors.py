"""Exception hierarchy shared by all tropidom modules."""


class TropidomError(Exception):
    """Base class for all library errors."""


class GraphBuildError(TropidomError):
    """Invalid graph construction input."""


class SelfLoopError(GraphBuildError):
    pass


class DuplicateEdgeError(GraphBuildError):
    pass


class ColourGapError(GraphBuildError):
    """Some colour in 1..c has no vertex."""


class OutOfRangeError(GraphBuildError):
    pass


class ParseError(TropidomError):
    """Instance / CNF file rejected; carries a 1-based line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class BudgetExceededError(TropidomError):
    """Search node budget exhausted before optimality was proven."""


class NotDominatingError(TropidomError):
    pass


class NotTropicalDominatingError(TropidomError):
    pass


class NotAPathError(TropidomError):
    pass


class RepresentationMismatchError(TropidomError):
    """Interval intersection graph differs from the declared edge set."""


class NoRepresentationError(TropidomError):
    """Instance carries no interval representation."""


class TooManyColoursError(TropidomError):
    pass


class BadParametersError(TropidomError):
    pass


class BadEpsilonError(BadParametersError):
    pass


class MalformedFormulaError(TropidomError):
    pass


class NotSubcubicError(TropidomError):
    pass


class HasIsolatedVertexError(TropidomError):
    pass


class EmptyGraphError(TropidomError):
    pass


class WrongArtifactError(TropidomError):
    pass
