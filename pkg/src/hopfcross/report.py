"""Pass/fail bookkeeping for identity checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .tensor import ExactArray


@dataclass
class CheckResult:
    axiom: str
    location: str
    status: str  # "pass" | "fail" | "info"
    witness: str | None = None
    lhs: list | None = None
    rhs: list | None = None

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        d = {"axiom": self.axiom, "location": self.location, "status": self.status}
        for key in ("witness", "lhs", "rhs"):
            v = getattr(self, key)
            if v is not None:
                d[key] = v
        return d

    def line(self) -> str:
        s = f"[{self.status.upper():4}] {self.axiom} @ {self.location}"
        if self.witness:
            s += f"  witness: {self.witness}"
        return s


@dataclass
class Report:
    entries: list[CheckResult] = field(default_factory=list)
    header: dict = field(default_factory=dict)

    def add(self, entry: CheckResult) -> CheckResult:
        self.entries.append(entry)
        return entry

    def extend(self, other: "Report") -> "Report":
        self.entries.extend(other.entries)
        return self

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[CheckResult]:
        return [e for e in self.entries if not e.ok]

    def first_failure(self) -> CheckResult | None:
        return next((e for e in self.entries if not e.ok), None)

    def get(self, axiom: str) -> list[CheckResult]:
        return [e for e in self.entries if e.axiom == axiom]

    def passed(self, axiom: str) -> bool:
        hits = self.get(axiom)
        return bool(hits) and all(e.ok for e in hits)

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return self.ok

    def to_jsonl(self) -> str:
        lines = []
        if self.header:
            lines.append(json.dumps({"header": self.header}, sort_keys=True))
        lines.extend(json.dumps(e.to_dict(), sort_keys=True) for e in self.entries)
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        return "\n".join(e.line() for e in self.entries) + "\n"

    def __repr__(self):
        nfail = len(self.failures())
        return f"Report({len(self.entries)} checks, {nfail} failed)"


def _label(idx: Sequence[int], names: Sequence[Sequence[str]] | None) -> str:
    if names is None:
        return "(" + ", ".join(str(i) for i in idx) + ")"
    parts = [repr(names[k][i]) if k < len(names) and names[k] is not None else str(i) for k, i in enumerate(idx)]
    return parts[0] if len(parts) == 1 else "(" + ", ".join(parts) + ")"


def compare(
    axiom: str,
    location: str,
    lhs: ExactArray,
    rhs: ExactArray,
    n_inputs: int,
    names: Sequence[Sequence[str]] | None = None,
) -> CheckResult:
    """Exact equality check of two tensors.

    The leading ``n_inputs`` axes index basis inputs; the remaining axes are
    output coordinates.  On failure the first differing input tuple is the
    witness and both sides' output coordinates are recorded.
    """
    if lhs.shape != rhs.shape:
        return CheckResult(axiom, location, "fail", witness=f"shape {lhs.shape} != {rhs.shape}")
    if lhs == rhs:
        return CheckResult(axiom, location, "pass")
    diff = lhs - rhs
    nz = np.argwhere(diff.num != 0)
    first = tuple(int(i) for i in nz[0][:n_inputs])
    sub = tuple(first) if n_inputs else ()
    return CheckResult(
        axiom,
        location,
        "fail",
        witness=f"basis {_label(first, names)}" if n_inputs else "scalar identity",
        lhs=_flat_fmt(lhs, sub),
        rhs=_flat_fmt(rhs, sub),
    )


MAX_WITNESS_TERMS = 64


def _flat_fmt(a: ExactArray, sub: tuple) -> list:
    """Nonzero output coordinates as ``[index, value]`` pairs (capped)."""
    part = a[sub] if sub else a
    if part.ndim == 0:
        return [[[], part.format()]]
    out = []
    for idx in part.nonzero()[:MAX_WITNESS_TERMS]:
        out.append([list(idx), part.field.format(part.item(*idx))])
    return out


def merge(axiom: str, location: str, results: Sequence[CheckResult]) -> CheckResult:
    """Collapse several sub-checks into one entry (first failure wins)."""
    for r in results:
        if not r.ok:
            return CheckResult(axiom, location, "fail", r.witness, r.lhs, r.rhs)
    return CheckResult(axiom, location, "pass")
