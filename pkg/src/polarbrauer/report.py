"""Pass/fail check lists shared by the verification suites."""

from __future__ import annotations

import hashlib
import json


class Check:
    __slots__ = ("name", "passed", "detail")

    def __init__(self, name, passed, detail=""):
        self.name, self.passed, self.detail = name, bool(passed), detail

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}

    def __repr__(self):
        return f"[{'ok' if self.passed else 'FAIL'}] {self.name}"


class Report:
    """A titled list of named pass/fail checks."""

    def __init__(self, title: str):
        self.title = title
        self.checks: list[Check] = []

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, passed, detail))

    def expect_zero(self, name, element):
        zero = element.is_zero() if hasattr(element, "is_zero") else not element
        self.add(name, zero, "" if zero else f"nonzero: {summarise(element)}")

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def as_dict(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def __repr__(self):
        flag = "PASS" if self.passed else "FAIL"
        return f"<Report {self.title}: {flag} ({len(self.checks)} checks)>"


def summarise(value, limit: int = 64) -> str:
    """Render small values verbatim; hash anything bigger."""
    text = repr(value)
    if len(text) <= 4 * limit:
        return text
    digest = hashlib.sha256(text.encode()).hexdigest()[:16]
    return f"<{type(value).__name__} sha256:{digest}>"


def dump(report: Report, path: str):
    with open(path, "w") as fh:
        json.dump(report.as_dict(), fh, indent=2)
