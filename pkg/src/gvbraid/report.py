"""Uniform result records for the verification commands.

Every long-running check in the package reports through
:class:`VerificationReport` so the CLI can emit one JSON line per check and
scripts can aggregate pass/fail uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one exhaustive or sampled verification run."""

    subject: str
    checked: int = 0
    failed: int = 0
    first_counterexample: str | None = None
    seconds: float = 0.0
    mode: str = "exhaustive"
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> int:
        return self.checked - self.failed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        doc = {
            "subject": self.subject,
            "ok": self.ok,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "mode": self.mode,
            "seconds": round(self.seconds, 3),
        }
        if self.first_counterexample is not None:
            doc["first_counterexample"] = self.first_counterexample
        if self.details:
            doc["details"] = self.details
        return doc

    def summary_line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        line = (
            f"[{status}] {self.subject}: {self.passed}/{self.checked} checks"
            f" ({self.mode}, {self.seconds:.2f}s)"
        )
        if self.first_counterexample:
            line += f" first counterexample: {self.first_counterexample}"
        return line
