"""Exception types shared across the package.

The extraction routines follow one protocol: they always attempt the
construction, and only when the attempt fails do they look at the degree
hypothesis. A failure below the theorem's bound is the caller's problem
(HypothesisUnmet); a failure at or above the bound is ours (InternalBug),
because the theorems guarantee success there.
"""

from __future__ import annotations


class FormatError(ValueError):
    """Malformed input: edge-list text, certificate JSON, or infeasible parameters."""


class HypothesisUnmet(Exception):
    """The construction failed and the input violates the stated hypothesis."""

    def __init__(self, message: str, *, required: str | None = None, actual: str | None = None):
        detail = message
        if required is not None:
            detail += f" (required {required}"
            if actual is not None:
                detail += f", got {actual}"
            detail += ")"
        super().__init__(detail)
        self.required = required
        self.actual = actual


class BudgetExceeded(Exception):
    """An exhaustive search hit its node-expansion cap; no answer is implied."""


class SizeGuardExceeded(Exception):
    """An exact exponential solver refused an input above its size limit."""


class InternalBug(RuntimeError):
    """The hypothesis holds but the pipeline failed; this is a defect, not a user error."""

    def __init__(self, message: str, *, state: object = None):
        super().__init__(message)
        self.state = state
