"""Law-check reports shared by every checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

MAX_VIOLATIONS = 20


@dataclass(frozen=True)
class Violation:
    inputs: str
    lhs: str
    rhs: str


@dataclass
class LawReport:
    law: str
    trials: int = 0
    seed: int = 0
    violations: list = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, ok: bool, inputs, lhs="", rhs="") -> bool:
        """Count one trial; keep the first few failures as counterexamples."""
        self.trials += 1
        if not ok and len(self.violations) < MAX_VIOLATIONS:
            self.violations.append(Violation(str(inputs), str(lhs), str(rhs)))
        return ok

    def to_json(self) -> dict:
        d = {
            "law": self.law,
            "trials": self.trials,
            "seed": self.seed,
            "pass": self.passed,
            "violations": [
                {"inputs": v.inputs, "lhs": v.lhs, "rhs": v.rhs} for v in self.violations
            ],
        }
        if self.note:
            d["note"] = self.note
        return d

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.law}  ({self.trials} trials, seed {self.seed})"
        if self.violations:
            v = self.violations[0]
            line += f"\n      counterexample: {v.inputs}\n        lhs = {v.lhs}\n        rhs = {v.rhs}"
        return line


def dumps(reports) -> str:
    return json.dumps([r.to_json() for r in reports], sort_keys=True, indent=2, ensure_ascii=False)


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
