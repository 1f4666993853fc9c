"""Outcome records shared by every check."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


@dataclass
class CheckResult:
    id: str
    status: str
    witness: str = ""
    note: str = ""
    paper_ref: str = ""
    u_mode: str = "generic"
    duration: float = 0.0
    details: list = field(default_factory=list)

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"bad status {self.status}")
        if self.status == FAIL and not self.witness:
            self.witness = "(no witness recorded)"

    @property
    def ok(self) -> bool:
        return self.status != FAIL


def check(cid: str, condition: bool, witness: str = "", note: str = "", **kw) -> CheckResult:
    """PASS/FAIL result; the witness is kept either way."""
    return CheckResult(cid, PASS if condition else FAIL, witness=witness, note=note, **kw)


def skipped(cid: str, reason: str, **kw) -> CheckResult:
    return CheckResult(cid, SKIPPED, witness=reason, **kw)


def combine(cid: str, parts, note: str = "", **kw) -> CheckResult:
    """Aggregate sub-results into one record; sub-results go into details."""
    parts = list(parts)
    failed = [p for p in parts if p.status == FAIL]
    status = FAIL if failed else (SKIPPED if parts and all(p.status == SKIPPED for p in parts) else PASS)
    lines = [f"{p.id}: {p.status} {p.witness}".rstrip() for p in parts]
    notes = [p.note for p in parts if p.note]
    if note:
        notes.insert(0, note)
    return CheckResult(cid, status, witness="; ".join(lines), note=" | ".join(notes), details=parts, **kw)
