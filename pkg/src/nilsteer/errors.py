"""Exception hierarchy.

Everything raised deliberately by this package derives from NilsteerError,
so callers can catch one type at the boundary.  The CLI maps subclasses to
exit codes (usage errors 2, check/tolerance failures 1, internal oracle
mismatches 3).
"""


class NilsteerError(Exception):
    """Base class for all package errors."""


class UsageError(NilsteerError):
    """Caller violated a documented precondition."""


class AlgebraSizeError(UsageError):
    """Requested free nilpotent algebra exceeds the basis-size cap."""

    def __init__(self, m, k, dimension, cap):
        self.dimension = dimension
        super().__init__(
            f"basis for m={m}, k={k} has {dimension} elements, above the cap {cap}"
        )


class UnsupportedOrderError(UsageError):
    """Operation only implemented up to a fixed nilpotency order."""


class UnsupportedConfigurationError(UsageError):
    """Exact synthesis not available for this (m, k); use approximate mode."""


class DomainError(NilsteerError):
    """A point left the validity domain of a vector field."""


class SchemaError(UsageError):
    """System definition file violates the documented schema."""


class RankDeficiencyError(NilsteerError):
    """Fictitious-input solve failed to reproduce the curve velocity."""

    def __init__(self, node, residual, tol):
        self.node = node
        self.residual = residual
        super().__init__(
            f"span residual {residual:.3e} exceeds {tol:.1e} at collocation node {node}"
        )


class DivergenceError(NilsteerError):
    """Numerical integration produced a non-finite state."""


class SynthesisError(NilsteerError):
    """Schedule verification against the series oracle failed."""

    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)


class RefinementError(NilsteerError):
    """Iterative steering stalled or ran out of iterations."""

    def __init__(self, message, history):
        self.history = list(history)
        super().__init__(f"{message}; error history {self.history}")
