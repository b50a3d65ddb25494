"""
Exception types shared by the algebra packages.

Axiom violations are data (AxiomReport), not exceptions. Exceptions are
reserved for malformed inputs and for guards that must never fire on valid
inputs.
"""

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from .reports import AxiomReport


class ShapeMismatchError(ValueError):
    """Raised when tensor, matrix or vector shapes do not fit together."""


class InvalidStructureError(ValueError):
    """Raised when an input structure fails the axiom check a construction requires."""

    def __init__(self, kind: str, report: "AxiomReport"):
        self.kind = kind
        self.report = report
        first = report.first_violation
        where = f" (first: {first.axiom} at {first.indices})" if first else ""
        super().__init__(f"Input is not a valid {kind}: {len(report.violations)} violation(s){where}")


class GuardFailure(RuntimeError):
    """
    Raised when a well-definedness or membership guard fails.

    Attributes:
        guard: Stable kebab-case guard name, e.g. "associativization-ideal"
        detail: Human-readable description of the failing instance
    """

    def __init__(self, guard: str, detail: Optional[str] = None):
        self.guard = guard
        self.detail = detail or ""
        message = f"Guard '{guard}' failed"
        if detail:
            message += f": {detail}"
        super().__init__(message)
