"""
Validation of the BPA axioms.

Checks m(empty) = 0, m(A) >= 0 and sum m = 1 within a tolerance, collecting
every violation instead of stopping at the first one.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List

from .mass import MassFunction

DEFAULT_TOLERANCE = 1e-9


class IssueCode(str, Enum):
    """Kinds of BPA axiom violations."""

    NEGATIVE_MASS = "NegativeMass"
    EMPTY_SET_MASS = "EmptySetMass"
    SUM_NOT_ONE = "SumNotOne"


@dataclass(frozen=True)
class ValidationIssue:
    """Axiom violation with context."""

    code: IssueCode
    message: str
    location: str  # Offending entry, e.g. 'mass:A,B' or 'total'
    value: float = 0.0


@dataclass
class ValidationResult:
    """Outcome of ``validate``; ``ok`` iff there are no issues."""

    issues: List[ValidationIssue] = field(default_factory=list)
    total: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.issues

    def codes(self) -> List[IssueCode]:
        return [issue.code for issue in self.issues]

    def get_summary(self) -> str:
        """Human-readable summary, one line per issue."""
        if self.ok:
            return "\n✓ BPA satisfies m(∅)=0, m(A)≥0 and Σm=1"
        lines = [f"\n{len(self.issues)} Error(s):"]
        for issue in self.issues:
            lines.append(f"  [{issue.code.value}] {issue.location}: {issue.message}")
        return "\n".join(lines)


def validate(m: MassFunction, tol: float = DEFAULT_TOLERANCE) -> ValidationResult:
    """
    Check a mass function against the BPA axioms.

    Args:
        m: Mass function to check
        tol: Accepted deviation of the total mass from 1

    Returns:
        ValidationResult listing NegativeMass, EmptySetMass and SumNotOne issues
    """
    result = ValidationResult(total=math.fsum(m.masses.values()))

    for bits in sorted(m.masses):
        value = m.masses[bits]
        if not math.isfinite(value):
            result.issues.append(
                ValidationIssue(
                    code=IssueCode.NEGATIVE_MASS,
                    message=f"Mass {value} is not a finite number",
                    location=f"mass:{m.frame.format_subset(bits)}",
                    value=value,
                )
            )
            continue
        if bits == 0:
            result.issues.append(
                ValidationIssue(
                    code=IssueCode.EMPTY_SET_MASS,
                    message=f"Empty set is not a focal element (mass {value})",
                    location="mass:{}",
                    value=value,
                )
            )
            continue
        if value < 0.0:
            result.issues.append(
                ValidationIssue(
                    code=IssueCode.NEGATIVE_MASS,
                    message=f"Negative mass {value}",
                    location=f"mass:{m.frame.format_subset(bits)}",
                    value=value,
                )
            )

    if not math.isfinite(result.total) or abs(result.total - 1.0) > tol:
        result.issues.append(
            ValidationIssue(
                code=IssueCode.SUM_NOT_ONE,
                message=f"Masses sum to {result.total:.12g}, expected 1 ± {tol:g}",
                location="total",
                value=result.total,
            )
        )
    return result
