"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class LiftCoverError(Exception):
    """Base class for all errors raised by liftcover."""


class WordSyntaxError(LiftCoverError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class RankMismatchError(LiftCoverError, ValueError):
    pass


class InvalidCoverError(LiftCoverError, ValueError):
    pass


class DisconnectedCoverError(InvalidCoverError):
    pass


class FamilySpecError(LiftCoverError, ValueError):
    pass


class PreconditionError(LiftCoverError, ValueError):
    pass


class BudgetExceeded(LiftCoverError):
    """Search stopped before completion.

    ``lower_bound`` is the largest degree for which the search was exhaustive,
    so the quantity being searched for is known to exceed it.
    """

    def __init__(self, message, lower_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound


class InconsistencyError(LiftCoverError, AssertionError):
    """Two routes that must agree (closed-form criterion vs traversal) did not."""
