"""Exception types shared across the package."""


class FaskitError(Exception):
    """Base class for every error raised by this package."""


# ---- graph model ----------------------------------------------------------

class LoopArcError(FaskitError):
    """An arc from a vertex to itself was requested; loops are outside the model."""


class TwoCycleError(FaskitError):
    """Adding the arc would create a directed 2-cycle, which the model forbids."""


class InactiveVertexError(FaskitError):
    """An operation referenced a vertex that is not active in the graph."""


class MissingArcError(FaskitError):
    """An arc (or enough copies of it) is not present in the graph."""


class OrderingMismatchError(FaskitError):
    """An ordering does not cover exactly the active vertex set, or is malformed."""


# ---- reductions and solvers ----------------------------------------------

class PreconditionViolatedError(FaskitError):
    """A reduction record's preconditions do not hold in the given graph."""


class InternalInvariantError(FaskitError):
    """A structural fact the algorithm relies on failed to materialize.

    Seeing this means a bug (or an input outside the documented contract),
    never a recoverable condition.
    """


class NotIrreducibleError(FaskitError):
    """The graph still admits a reduction (or is empty) where an irreducible
    graph was required."""


class DegreeTooHighError(FaskitError):
    """The input exceeds the solver's maximum-degree contract."""


class BaseCaseTooLargeError(FaskitError):
    """An irreducible degree-4 component exceeds the exact-oracle cap."""


class NotRegular5Error(FaskitError):
    """The input is not degree-5 (some vertex has degree != 5)."""


class QSetConflictError(FaskitError):
    """Neighborhood blobs that must be disjoint and non-adjacent overlap."""


# ---- oracle and generators -------------------------------------------------

class TooLargeError(FaskitError):
    """The instance exceeds the exact solver's size cap."""


class NotACycleError(FaskitError):
    """A listed vertex sequence is not a directed cycle of the graph."""


class InfeasibleError(FaskitError):
    """A random generator exhausted its retry budget."""


class DegreeExceedsKError(FaskitError):
    """Regularization target degree is below the graph's maximum degree."""


# ---- serialization ---------------------------------------------------------

class ParseError(FaskitError):
    """Malformed input text; the message carries the line number and reason."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason
