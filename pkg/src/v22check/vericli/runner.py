"""Run registry checks over a list of parameter values and assemble a report."""

from __future__ import annotations

import json
import platform
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .. import __version__
from ..exactalg import scalar_str
from ..results import FAIL, PASS, SKIPPED, CheckResult, combine
from .registry import CONSTANT, FIXED, REGISTRY

SCHEMA = "v22check.report/1"


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    checks: tuple = ()  # empty means every registered id
    u_values: tuple = ()  # empty means the generic parameter only
    format: str = "text"
    jobs: int = 1
    allow_singular: bool = False

    def validate(self):
        unknown = [c for c in self.checks if c not in REGISTRY]
        if unknown:
            raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
        for u in self.u_values:
            if u == 0:
                raise UsageError("u = 0 is excluded")
            if u == 1 and not self.allow_singular:
                raise UsageError("u = 1 makes the quadric singular; pass --allow-singular to explore it")
        if self.format not in ("text", "structured"):
            raise UsageError(f"unknown format {self.format}")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")

    def selected(self):
        return tuple(sorted(self.checks)) if self.checks else tuple(REGISTRY)


@dataclass
class Report:
    config: RunConfig
    records: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return FAIL if any(r.status == FAIL for r in self.records) else PASS

    def counts(self):
        return {s: sum(1 for r in self.records if r.status == s) for s in (PASS, FAIL, SKIPPED)}


def _units(config: RunConfig):
    """(id, u) pairs to evaluate; u is None, a Fraction, or 'constant'."""
    units = []
    us = list(config.u_values) or [None]
    for cid in config.selected():
        spec = REGISTRY[cid]
        if spec.mode == CONSTANT:
            units.append((cid, "constant"))
            continue
        for u in us:
            units.append((cid, u))
    return units


def run_unit(cid: str, u) -> CheckResult:
    spec = REGISTRY[cid]
    start = time.perf_counter()
    if u == "constant":
        label, arg = "constant", None
    elif spec.mode == FIXED:
        label, arg = scalar_str(spec.fixed_u), spec.fixed_u
        if u is not None and Fraction(u) != spec.fixed_u:
            return _finish(CheckResult(cid, SKIPPED, witness=f"only meaningful at u = {label}"), spec, scalar_str(u), start)
    else:
        label, arg = ("generic" if u is None else scalar_str(u)), u
    if arg is not None and arg == 1:
        if cid == "quadric-smooth":
            return _finish(CheckResult(cid, SKIPPED, witness="the quadric is singular at u = 1"), spec, label, start)
        try:
            parts = spec.fn(arg)
        except (ArithmeticError, ValueError) as exc:
            return _finish(CheckResult(cid, SKIPPED, witness=f"undefined at u = 1: {exc}"), spec, label, start)
    else:
        try:
            parts = spec.fn(arg)
        except Exception as exc:  # a crash is a failure with the exception as witness
            return _finish(CheckResult(cid, FAIL, witness=f"{type(exc).__name__}: {exc}"), spec, label, start)
    return _finish(combine(cid, parts), spec, label, start)


def _finish(res: CheckResult, spec, label, start) -> CheckResult:
    res.paper_ref = spec.paper_ref
    res.u_mode = label
    res.duration = time.perf_counter() - start
    return res


def _order_key(res: CheckResult):
    # generic and constant first, then the rational values in increasing order
    try:
        return (res.id, 1, Fraction(res.u_mode))
    except ValueError:
        return (res.id, 0, Fraction(0))


def run(config: RunConfig) -> Report:
    config.validate()
    units = _units(config)
    if config.jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(run_unit, [c for c, _ in units], [u for _, u in units]))
    else:
        records = [run_unit(c, u) for c, u in units]
    records.sort(key=_order_key)
    return Report(config, records)


# output


def _part_dict(p: CheckResult):
    d = {"id": p.id, "status": p.status, "witness": p.witness}
    if p.note:
        d["note"] = p.note
    return d


def to_structured(report: Report) -> str:
    cfg = report.config
    doc = {
        "schema": SCHEMA,
        "config": {
            "checks": list(cfg.selected()),
            "u_values": [scalar_str(u) for u in cfg.u_values] or ["generic"],
            "allow_singular": cfg.allow_singular,
        },
        "environment": {
            "package": "v22check",
            "version": __version__,
            "python": platform.python_version(),
            "implementation": platform.python_implementation(),
        },
        "checks": [
            {
                "id": r.id,
                "u_mode": r.u_mode,
                "status": r.status,
                "witness": r.witness if not r.details else "",
                "paper_ref": r.paper_ref,
                "note": r.note,
                "parts": [_part_dict(p) for p in r.details],
            }
            for r in report.records
        ],
        "summary": {"status": report.status, **{k.lower(): v for k, v in report.counts().items()}},
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def to_text(report: Report, verbose: bool = False) -> str:
    lines = []
    for r in report.records:
        lines.append(f"{r.status:<7} {r.id} [{r.u_mode}]  ({r.paper_ref})")
        parts = r.details or [r]
        for p in parts:
            if verbose or p.status != PASS or p is r:
                lines.append(f"    {p.status:<7} {p.id}: {p.witness}".rstrip())
        if r.note:
            for n in r.note.split(" | "):
                lines.append(f"    note: {n}")
    c = report.counts()
    lines.append(f"{report.status}: {c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped")
    return "\n".join(lines) + "\n"
