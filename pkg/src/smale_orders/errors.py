"""Exception types shared across the toolkit."""


class SmaleOrderError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------- order input


class OrderSpecError(SmaleOrderError):
    """Invalid order description."""


class DuplicateElement(OrderSpecError):
    pass


class UnknownElementInRelation(OrderSpecError):
    pass


class CycleInRelation(OrderSpecError):
    pass


class IsolatedElement(OrderSpecError):
    """An element unrelated to everything is both maximal and minimal.

    Such an element would have to be an attractor and a repeller at once,
    which the role trichotomy does not allow, so it is rejected at load time.
    """


# ---------------------------------------------------------------- cycle stage


class NotExtremal(SmaleOrderError):
    pass


class ConnectivityFailure(SmaleOrderError):
    """The order fails the connectivity condition at some extremal element."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NoMediator(SmaleOrderError):
    """An extremal element is related to an opposite extremal that mediates
    no transition (north-south style degeneracy)."""


class PreconditionViolated(SmaleOrderError):
    pass


# ----------------------------------------------------------------- band stage


class StarViolated(SmaleOrderError):
    """Cycle assignment does not balance transition counts across sides."""


class ExhaustionFailure(SmaleOrderError):
    """Internal invariant failure during boundary traversal.

    Balanced inputs always close up; reaching this indicates a bug, never a
    rejectable input.
    """


# --------------------------------------------------------------- domain stage


class NonIntegralGenus(SmaleOrderError):
    """A profile slipped past the congruence check (internal assertion)."""


# ------------------------------------------------------------- gradient stage


class NotGradientShape(SmaleOrderError):
    """Order has saddles outside the gradient-like class (generation > 1 or
    more than two related extremals on a side)."""


class DisconnectedGraph(SmaleOrderError):
    pass
