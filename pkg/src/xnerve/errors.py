"""Exception types and the shared enumeration budget."""

from __future__ import annotations

# Enumerations (cells, kernels, horns) abort once their predicted size
# exceeds this, instead of thrashing.  Callers may pass their own cap.
DEFAULT_CAPACITY = 5_000_000


class XNerveError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(XNerveError):
    """Malformed data: non-total tables, dangling ids, bad shapes.

    Distinct from an axiom violation, which is reported, not raised.
    """


class CellError(StructureError):
    """A nerve cell fails its typing invariants; names the offending entry."""


class NotComposableError(XNerveError):
    """Composition requested for a pair with mismatched endpoints."""


class CompatibilityError(XNerveError):
    """Faces handed to a reconstruction do not fit together."""


class CapacityError(XNerveError):
    """Predicted enumeration size exceeds the configured budget."""

    def __init__(self, message: str, predicted: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.predicted = predicted
        self.cap = cap


class NotCrossedModuleError(XNerveError):
    """An operation that needs a crossed module was given something weaker.

    ``hypothesis`` names the first failing requirement
    (``category_is_groupoid``, ``fibers_are_groups``, ``fibers_cancellative``
    or ``action_injective``); ``witness`` pins it to concrete ids.
    """

    def __init__(self, hypothesis: str, witness: tuple = (), message: str | None = None):
        self.hypothesis = hypothesis
        self.witness = witness
        super().__init__(message or f"failed hypothesis {hypothesis!r} (witness {witness!r})")


class NotKanError(XNerveError):
    """A homotopy-group computation met an unfillable horn."""

    def __init__(self, dim: int, omitted: int, witness=None):
        self.dim = dim
        self.omitted = omitted
        self.witness = witness
        super().__init__(f"unfillable horn in dimension {dim} at position {omitted}")
