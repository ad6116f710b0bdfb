"""The acceptance battery: nine suite runs, each with a wall-clock budget."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .verify import DEFAULT_TYPES, SuiteConfig, VerifyReport, run_suite


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    suite: str
    types: str
    limit: float  # seconds


CRITERIA = (
    Criterion(1, "dual Coxeter identity", "dcox", "A1..A4,B2..B4,C2..C4,D4,F4,G2", 5),
    Criterion(2, "Kac-Moody action laws", "kacmoody", DEFAULT_TYPES["kacmoody"], 30),
    Criterion(3, "s_0 calibration", "s0", DEFAULT_TYPES["s0"], 5),
    Criterion(4, "DAHA relations", "daha", DEFAULT_TYPES["daha"], 120),
    Criterion(5, "shifted weight commutes with s_i", "pfdaha", DEFAULT_TYPES["pfdaha"], 10),
    Criterion(6, "operator-model oracle", "oracle", DEFAULT_TYPES["oracle"], 60),
    Criterion(7, "convolution algebra laws", "conv", DEFAULT_TYPES["conv"], 60),
    Criterion(8, "parahoric counts", "parahoric", DEFAULT_TYPES["parahoric"], 5),
    Criterion(9, "Av embedding normalization", "avembed", DEFAULT_TYPES["avembed"], 60),
)


@dataclass
class Outcome:
    criterion: Criterion
    report: VerifyReport
    seconds: float

    @property
    def in_time(self) -> bool:
        return self.seconds < self.criterion.limit

    @property
    def passed(self) -> bool:
        return self.report.passed and self.in_time

    def line(self) -> str:
        c = self.criterion
        status = "PASS" if self.passed else "FAIL"
        failing = [f"{k.name}@{k.datum}" for k in self.report.checks if not k.passed]
        extra = f" failing={failing[:3]}" if failing else ""
        return (f"[{status}] criterion {c.number} {c.title}: {len(self.report.checks)} checks on "
                f"{len(self.report.data)} data, {self.seconds:.1f}s (limit {c.limit:g}s){extra}")


def evaluate(c: Criterion, config: SuiteConfig | None = None) -> Outcome:
    start = time.perf_counter()
    report = run_suite(c.suite, c.types, config)
    return Outcome(c, report, time.perf_counter() - start)
