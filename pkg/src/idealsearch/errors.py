"""Exception types shared across the package."""


class IdealSearchError(Exception):
    """Base class for all errors raised by this package."""


class CycleDetected(IdealSearchError):
    """The supplied cover edges contain a directed cycle."""


class UnknownNodeId(IdealSearchError):
    """A node id was referenced that is not part of the poset."""


class HeightOutOfRange(IdealSearchError):
    """A requested height is outside [1, ht(poset)]."""


class InvalidParameter(IdealSearchError):
    """A numeric argument is outside its documented domain."""


class NotPointed(IdealSearchError):
    """The operation requires an empty poset or a unique minimal element."""


class NodeNotPending(IdealSearchError):
    """An answer was supplied for a node other than the pending query."""


class NotTerminal(IdealSearchError):
    """The search state has not reached a conclusion yet."""


class BudgetExhausted(IdealSearchError):
    """No positive queries remain but the search is not finished."""


class InstanceTooLarge(IdealSearchError):
    """The poset exceeds the node cap of the exact solver."""


class InconsistentAnswer(IdealSearchError):
    """The supplied answer is incompatible with every remaining ideal."""


class InvariantViolation(IdealSearchError):
    """A verified invariant failed; carries diagnostic detail."""
