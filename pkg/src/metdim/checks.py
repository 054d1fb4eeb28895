"""Named pass/fail results shared by the verification suites."""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    claim: str = ""

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d) -> "Check":
        return cls(d["name"], d["passed"], d.get("detail", ""), d.get("claim", ""))

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"
