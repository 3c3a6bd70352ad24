"""Pass/fail reports with first-failure witnesses.

Every axiom checker returns a Report: one named Check per condition, each
carrying, on failure, the first violating basis index tuple together with
both sides' coefficient vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .linalg import Matrix, TensorIndex


@dataclass
class Check:
    name: str
    passed: bool
    witness: Optional[dict] = None

    def to_json(self):
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    subreports: dict[str, "Report"] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(r.passed for r in self.subreports.values())

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def to_json(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "subreports": {k: r.to_json() for k, r in self.subreports.items()},
        }

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"{pad}  [{mark}] {c.name}")
            if c.witness:
                lines.append(f"{pad}         witness: {c.witness}")
        for r in self.subreports.values():
            lines.append(r.render(indent + 1))
        return "\n".join(lines)


def matrices_equal(name: str, lhs: Matrix, rhs: Matrix, dom: Optional[TensorIndex] = None) -> Check:
    """Exact matrix equality with a first-differing-column witness."""
    if lhs == rhs:
        return Check(name, True)
    bad = None
    for c in range(lhs.cols):
        if lhs.column(c) != rhs.column(c):
            bad = c
            break
    witness = None
    if bad is not None:
        idx = list(dom.unflatten(bad)) if dom is not None else [bad]
        witness = {
            "input_index": idx,
            "lhs": [str(s) for s in lhs.column(bad)],
            "rhs": [str(s) for s in rhs.column(bad)],
        }
    return Check(name, False, witness)
