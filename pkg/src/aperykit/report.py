"""Structured mismatch records shared by verification and the command line."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True)
class Discrepancy:
    """A formula whose value differs from what the oracle computed.

    ``known`` marks documented deviations, reported as warnings rather
    than failures.
    """

    params: dict[str, int]
    claim: str
    computed: Any
    expected: Any
    known: bool = False

    def as_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["computed"] = _jsonable(self.computed)
        out["expected"] = _jsonable(self.expected)
        out["severity"] = "warning" if self.known else "error"
        return out


@dataclass
class InstanceReport:
    """Named boolean checks plus discrepancies for one parameter tuple."""

    params: dict[str, int]
    checks: dict[str, bool] = field(default_factory=dict)
    discrepancies: list[Discrepancy] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, name: str, ok: bool, computed: Any = None, expected: Any = None) -> bool:
        self.checks[name] = bool(ok)
        if not ok:
            self.discrepancies.append(Discrepancy(self.params, name, computed, expected))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and not any(not d.known for d in self.discrepancies)

    def as_dict(self) -> dict[str, Any]:
        return {
            "params": self.params,
            "checks": dict(sorted(self.checks.items())),
            "discrepancies": [d.as_dict() for d in self.discrepancies],
            "notes": list(self.notes),
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value
