from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class VerificationReport:
    name: str
    status: str
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError(f"failing check {self.name!r} needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "pass": None if self.status == NOT_APPLICABLE else self.passed,
            "status": self.status,
            "witness": self.witness,
        }
        if self.details:
            out["details"] = self.details
        return out

    @classmethod
    def result(cls, name: str, ok: bool, witness=None, **details) -> "VerificationReport":
        return cls(name, PASS if ok else FAIL, witness, details)

    @classmethod
    def not_applicable(cls, name: str, reason: str, **details) -> "VerificationReport":
        return cls(name, NOT_APPLICABLE, {"reason": reason}, details)
