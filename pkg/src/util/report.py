"""
Verification and command reports.

Two report shapes live here:

VerificationReport
    Returned by every verify_* / check_* operation. It records which checks
    were run and every violation found, each with a small witness dict
    (indices, offending values). It never raises.

Report
    The document a CLI command prints. It separates "data" (deterministic,
    golden-testable) from "meta" (version, wall time) so acceptance tests can
    diff the data section alone.

All numbers in a report are exact strings or ints: integers stay ints,
rationals become "p/q", cyclotomic numbers become {"order", "coeffs"}.
Float approximations only appear under an explicit "approx" key.

See also:
    - errors.py: VerificationFailedError carries a failing VerificationReport
    - main.py: Renders Report objects as JSON or CSV
"""

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

from src.exact_arith.rational import format_rational

VACUUM_NOTE = {
    "vacuumIndex": 0,
    "vacuumCondition": "Z[0][0] == 1",
}


@dataclass(frozen=True)
class Violation:
    """One failed check instance with the indices/values that witness it."""

    check: str
    witness: Dict[str, Any]
    message: str = ""

    def to_data(self) -> Dict[str, Any]:
        return {"check": self.check, "witness": to_exact(self.witness), "message": self.message}


@dataclass
class VerificationReport:
    """
    Outcome of a verification pass.

    Attributes:
        subject: What was verified (model name, "theorem2", ...)
        checks: Names of all checks that were evaluated, in evaluation order
        violations: Every violation found, in discovery order
    """

    subject: str
    checks: List[str] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def add_check(self, name: str) -> None:
        if name not in self.checks:
            self.checks.append(name)

    def fail(self, check: str, message: str = "", **witness: Any) -> None:
        self.add_check(check)
        self.violations.append(Violation(check, dict(witness), message))

    def failed_checks(self) -> List[str]:
        return list(dict.fromkeys(v.check for v in self.violations))

    def check_passed(self, name: str) -> bool:
        return name in self.checks and name not in self.failed_checks()

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        for name in other.checks:
            self.add_check(name)
        self.violations.extend(other.violations)
        return self

    def to_data(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": {name: self.check_passed(name) for name in self.checks},
            "violations": [v.to_data() for v in self.violations],
        }

    def summary(self) -> str:
        if self.passed:
            return f"{self.subject}: all {len(self.checks)} checks passed"
        first = self.first_violation
        return (
            f"{self.subject}: FAILED {', '.join(self.failed_checks())} "
            f"(first: {first.check} at {first.witness})"
        )


def to_exact(value: Any) -> Any:
    """Convert nested values into JSON-safe exact representations."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, float, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if hasattr(value, "to_data"):
        return value.to_data()
    if isinstance(value, dict):
        return {str(k): to_exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_exact(v) for v in value]
    return str(value)


@dataclass
class Report:
    """A CLI report: deterministic data plus non-deterministic meta."""

    command: str
    data: Dict[str, Any]
    meta: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        document = {"command": self.command, "data": to_exact(self.data), "meta": to_exact(self.meta)}
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)

    def data_json(self) -> str:
        """Only the golden-testable part, rendered canonically."""
        return json.dumps(to_exact(self.data), sort_keys=True, indent=2, ensure_ascii=False)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()
