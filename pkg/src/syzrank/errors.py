"""Exception types shared across modules."""

from __future__ import annotations

__all__ = ["InconsistencyError", "NotOnHypersurfaceError", "InvalidPointError", "NonIsolatedError"]


class InconsistencyError(RuntimeError):
    """Two independent computations disagree. This always signals a bug."""


class InvalidPointError(ValueError):
    """A point is malformed for its ambient space (wrong arity, zero vector, irrelevant locus)."""


class NotOnHypersurfaceError(InvalidPointError):
    """The point does not lie on the hypersurface."""


class NonIsolatedError(ValueError):
    """A computation that needs an isolated singularity met a non-isolated one."""
