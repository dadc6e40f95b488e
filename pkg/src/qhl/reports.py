"""Verification reports and small shared utilities.

Every checker in this package walks a finite window of basis keys, compares
two exactly-computed values per item, and returns a CheckReport.  Failures
are data, not exceptions: a report with failures still serializes and prints.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field


@dataclass
class Failure:
    where: tuple
    lhs: str
    rhs: str
    note: str = ""

    def to_dict(self):
        d = {"indices": list(self.where), "lhs": self.lhs, "rhs": self.rhs}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class CheckReport:
    name: str
    params: dict = field(default_factory=dict)
    window: list = field(default_factory=list)
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self, where, lhs, rhs, note=""):
        self.checked += 1
        if lhs != rhs:
            self.failures.append(Failure(tuple(where), str(lhs), str(rhs), note))

    def require(self, condition, where, lhs, rhs, note=""):
        self.checked += 1
        if not condition:
            self.failures.append(Failure(tuple(where), str(lhs), str(rhs), note))

    def note(self, text):
        self.notes.append(text)

    def merge(self, other):
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.notes.extend(f"{other.name}: {n}" for n in other.notes)
        return self

    def to_dict(self):
        return {
            "name": self.name,
            "params": self.params,
            "window": [list(w) if isinstance(w, tuple) else w for w in self.window],
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
            "notes": self.notes,
        }

    def summary(self):
        state = "pass" if self.ok else f"FAIL ({len(self.failures)} failures)"
        return f"{self.name}: checked {self.checked}, {state}"


def cyclic3(triple):
    x, y, z = triple
    return ((x, y, z), (y, z, x), (z, x, y))


def int_range(spec):
    """Parse a window like '-3..3' (or a bare int) into a list of ints."""
    if isinstance(spec, int):
        return [spec]
    text = str(spec)
    if ".." not in text:
        return [int(text)]
    lo, hi = text.split("..", 1)
    lo, hi = int(lo), int(hi)
    if hi < lo:
        raise ValueError(f"empty window {spec!r}")
    return list(range(lo, hi + 1))


def thread_count():
    """Worker cap from QHL_THREADS; anything unset or invalid means 1."""
    raw = os.environ.get("QHL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn, items):
    """Order-preserving map, threaded when QHL_THREADS allows it.

    Work items must be pure; results are merged in input order so output
    never depends on scheduling.
    """
    items = list(items)
    n = thread_count()
    if n <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
