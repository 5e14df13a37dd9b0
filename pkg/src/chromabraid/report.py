"""Machine-parsable pass/fail reports for the verification suites.

Every check renders as exactly four whitespace-free fields:

    RELATION-ID PASS|FAIL lhs rhs
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckLine:
    check_id: str
    passed: bool
    lhs: str
    rhs: str

    def __post_init__(self):
        for field in (self.check_id, self.lhs, self.rhs):
            if not field or any(ch.isspace() for ch in field):
                raise ValueError(f"report field with whitespace or empty: {field!r}")

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.check_id} {verdict} {self.lhs} {self.rhs}"


@dataclass(frozen=True)
class Report:
    lines: tuple[CheckLine, ...]

    @property
    def all_passed(self) -> bool:
        return all(line.passed for line in self.lines)

    def __add__(self, other: Report) -> Report:
        return Report(self.lines + other.lines)

    def render(self) -> str:
        return "\n".join(line.render() for line in self.lines) + ("\n" if self.lines else "")
