from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    message: str = ""
    code: str = ""

    def to_json(self):
        out = {"name": self.name, "passed": self.passed}
        if self.message:
            out["message"] = self.message
        if self.code and not self.passed:
            out["code"] = self.code
        return out


@dataclass
class Diagnostics:
    """Ordered list of named checks; never raises on its own."""

    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name, passed, message="", code=""):
        self.checks.append(Check(name, bool(passed), message, code))
        return bool(passed)

    def note(self, text):
        self.notes.append(text)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def violations(self):
        return [c for c in self.checks if not c.passed]

    @property
    def first_violation(self):
        v = self.violations
        return v[0] if v else None

    def passed_names(self):
        return {c.name for c in self.checks if c.passed}

    def extend(self, other: "Diagnostics"):
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    def to_json(self):
        out = {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}
        if self.notes:
            out["notes"] = list(self.notes)
        fv = self.first_violation
        if fv is not None:
            out["first_violation"] = fv.to_json()
        return out
