"""Exception hierarchy shared by all interdict modules."""


class InterdictError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInstance(InterdictError):
    """Instance data violates a structural invariant (bad ids, dangling
    vertices, self-loops, values out of range, ...)."""


class NotSeriesParallel(InterdictError):
    """The graph is not two-terminal series-parallel: the parallel/series
    reduction stalled before reaching a single source-sink arc."""


class CoordinateOverflow(InterdictError):
    """A length coordinate left the supported finite integer range."""


class InstanceTooLarge(InterdictError):
    """Exhaustive enumeration was refused because the number of
    budget-feasible interdiction subsets exceeds the configured cap."""

    def __init__(self, estimated: int, cap: int):
        super().__init__(
            f"estimated {estimated} feasible interdiction subsets exceeds cap {cap}"
        )
        self.estimated = estimated
        self.cap = cap


class InvariantViolation(InterdictError):
    """An internal solver invariant failed; indicates a bug, not bad input."""
