"""Structured pass/fail reports shared by validators and sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Named checks, each with a pass flag and a short detail string."""

    title: str
    checks: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks[name] = {"passed": bool(passed), "detail": detail}

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, c in self.checks.items() if not c["passed"]]

    def as_dict(self) -> dict:
        out = {"title": self.title, "passed": self.passed, "checks": self.checks}
        if self.data:
            out["data"] = self.data
        return out
