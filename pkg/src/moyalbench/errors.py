"""Exception types shared across the workbench."""


class MoyalBenchError(Exception):
    """Base class for all workbench errors."""


class DomainError(MoyalBenchError, ValueError):
    """Argument outside the mathematically valid range (e.g. lambda >= 1)."""


class IntegrabilityError(MoyalBenchError, ValueError):
    """Exponential-polynomial term with a nonpositive decay rate."""


class AccuracyError(MoyalBenchError, RuntimeError):
    """A numeric routine could not reach the requested tolerance in budget."""


class PoleError(MoyalBenchError, ZeroDivisionError):
    """Evaluation at a singular time of the star exponential."""


class ConditionalConvergenceWarning(UserWarning):
    """The series converges only conditionally here; expect slow oscillation."""
