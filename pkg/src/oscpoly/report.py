"""Structured pass/fail records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exact import GScalar, MomentValue, XPoly, gscalar_to_json, moment_to_json, xpoly_to_json


def to_json_value(value: Any) -> Any:
    if isinstance(value, XPoly):
        return xpoly_to_json(value)
    if isinstance(value, GScalar):
        return gscalar_to_json(value)
    if isinstance(value, MomentValue):
        return moment_to_json(value)
    return value


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    indices: tuple[int, ...]
    passed: bool
    expected: Any = field(default=None, compare=False)
    got: Any = field(default=None, compare=False)

    @classmethod
    def compare(cls, identity: str, indices, expected, got) -> VerifyReport:
        return cls(identity, tuple(indices), expected == got, expected, got)

    def to_json(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "indices": list(self.indices),
            "pass": self.passed,
            "expected": to_json_value(self.expected),
            "got": to_json_value(self.got),
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        idx = ",".join(map(str, self.indices))
        return f"{status} {self.identity}[{idx}]"
