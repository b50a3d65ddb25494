"""
Axiom reports.

Checkers evaluate identities exhaustively and collect every violation into an
AxiomReport. Violations are sorted by (axiom declaration order, indices), so a
report is deterministic and its first violation is well defined.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from exact_linalg import Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """One failing instance of an identity."""
    axiom: str
    indices: Tuple[int, ...]
    lhs: Vector
    rhs: Vector
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    """
    Result of an exhaustive axiom check.

    Attributes:
        kind: Structure kind that was checked, e.g. "dialgebra"
        axioms: Identity ids evaluated, in declaration order
        violations: Every violation, sorted by (axiom order, indices)
    """
    kind: str
    axioms: Tuple[str, ...]
    violations: Tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def violations_for(self, axiom: str) -> List[Violation]:
        return [v for v in self.violations if v.axiom == axiom]

    def failed_axioms(self) -> List[str]:
        seen = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return seen

    def counts(self) -> Dict[str, int]:
        """Violation count per checked axiom (zero for passing ones)."""
        result = {axiom: 0 for axiom in self.axioms}
        for v in self.violations:
            result[v.axiom] = result.get(v.axiom, 0) + 1
        return result

    def summary(self) -> str:
        if self.passed:
            return f"{self.kind}: all {len(self.axioms)} identities hold"
        first = self.first_violation
        return (f"{self.kind}: {len(self.violations)} violation(s) in "
                f"{', '.join(self.failed_axioms())}; first {first.axiom} at {first.indices}")


class ReportBuilder:
    """Accumulates violations while a checker runs."""

    def __init__(self, kind: str, axioms: Sequence[str] = ()):
        self.kind = kind
        self.axioms: List[str] = list(axioms)
        self.violations: List[Violation] = []

    def declare(self, *axioms: str) -> None:
        for axiom in axioms:
            if axiom not in self.axioms:
                self.axioms.append(axiom)

    def compare(self, axiom: str, indices: Iterable[int], lhs: Vector, rhs: Vector, detail: str = "") -> bool:
        """Record a violation when lhs != rhs; returns whether they agree."""
        if lhs == rhs:
            return True
        self.declare(axiom)
        self.violations.append(Violation(axiom, tuple(indices), tuple(lhs), tuple(rhs), detail))
        return False

    def fail(self, axiom: str, indices: Iterable[int] = (), lhs: Vector = (), rhs: Vector = (),
             detail: str = "") -> None:
        self.declare(axiom)
        self.violations.append(Violation(axiom, tuple(indices), tuple(lhs), tuple(rhs), detail))

    def extend(self, report: AxiomReport) -> None:
        """Fold a sub-report into this one."""
        self.declare(*report.axioms)
        self.violations.extend(report.violations)

    def build(self) -> AxiomReport:
        order = {axiom: rank for rank, axiom in enumerate(self.axioms)}
        ordered = sorted(self.violations, key=lambda v: (order[v.axiom], v.indices))
        report = AxiomReport(self.kind, tuple(self.axioms), tuple(ordered))
        logger.debug(f"{report.summary()}")
        return report


def merge_reports(kind: str, reports: Iterable[AxiomReport]) -> AxiomReport:
    builder = ReportBuilder(kind)
    for report in reports:
        builder.extend(report)
    return builder.build()
