"""Structured check results shared by the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one certification check.

    `check` is a stable identifier, `details` holds JSON-ready values only
    (ints, strings, bools, lists, dicts) so reports serialize byte for byte.
    """

    check: str
    passed: bool
    details: dict

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


@dataclass
class CertReport:
    """Ordered collection of check results for one input."""

    label: str
    verdicts: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.verdicts.append(result)

    def extend(self, results) -> None:
        self.verdicts.extend(results)

    @property
    def summary(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "checks": [
                {"check": v.check, "pass": v.passed, "details": v.details}
                for v in self.verdicts
            ],
            "summary": "pass" if self.summary else "fail",
        }
