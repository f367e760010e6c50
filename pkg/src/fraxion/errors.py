"""Exception hierarchy shared by the solvers, the oracle and the CLI."""


class FraxionError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FraxionError, ValueError):
    """Input parameters violate a type invariant (non-finite, non-positive, ...)."""


class Infeasible(FraxionError):
    """The optimization problem has no feasible point at all."""


class InfeasibleN(FraxionError):
    """No feasible dose vector exists for the requested number of fractions."""


class CapExceeded(FraxionError):
    """The fraction-count threshold exceeds the configured cap."""


class InternalConsistencyError(FraxionError):
    """A computed quantity contradicts the branch that produced it."""


class TooLarge(FraxionError):
    """The requested exhaustive search is beyond the configured cutoff."""


class NoFeasibleGridPoint(FraxionError):
    """No point of the dose grid satisfies the constraint."""
