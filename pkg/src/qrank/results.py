"""Verdict records shared by the series layer and the verifier."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    lhs: object
    rhs: object

    def as_dict(self):
        return {"exponent": self.exponent, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class CheckResult:
    """Outcome of one named verification.

    FAIL always carries ``first_mismatch``; ERROR always carries ``reason``.
    """

    name: str
    status: str  # PASS | FAIL | ERROR
    order_checked: int | None = None
    first_mismatch: Mismatch | None = None
    wall_ms: float = 0.0
    paper_anchor: str = ""
    reason: str = ""
    details: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def as_dict(self):
        return {
            "name": self.name,
            "paper_anchor": self.paper_anchor,
            "status": self.status,
            "order_checked": self.order_checked,
            "first_mismatch": self.first_mismatch.as_dict() if self.first_mismatch else None,
            "wall_ms": round(self.wall_ms, 3),
            "reason": self.reason,
            "details": list(self.details),
        }
