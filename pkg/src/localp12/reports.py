"""Pass/fail case records shared by the verification suites and the CLI."""

from dataclasses import dataclass, field


@dataclass
class CaseResult:
    key: str
    passed: bool
    first_mismatch: list | None = None
    info: dict | None = None

    def to_json(self):
        out = {
            "key": self.key,
            "pass": self.passed,
            "first_mismatch": self.first_mismatch,
        }
        if self.info is not None:
            out["info"] = self.info
        return out


@dataclass
class SuiteReport:
    suite: str
    cases: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    def to_json(self):
        return {"suite": self.suite, "cases": [c.to_json() for c in self.cases]}
