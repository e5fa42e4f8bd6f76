"""
Type definitions and factory functions.

Contains TypedDict classes for benchmark rows and report differences.
"""

from typing import List, Optional, TypedDict


# ─────────────────────────────────────────────────────────────────────────────
# TypedDict Classes
# ─────────────────────────────────────────────────────────────────────────────

class BenchRow(TypedDict):
    """One CSV row of the benchmark suite."""
    algorithm: str
    n: int
    m: int
    k: int
    seed: int
    ms: float


class ReportDiff(TypedDict):
    """A single alignment where two reports disagree (None = exceeds k)."""
    position: int
    expected: Optional[int]
    actual: Optional[int]


# CSV column order is part of the public contract.
BENCH_COLUMNS: List[str] = ["algorithm", "n", "m", "k", "seed", "ms"]


# ─────────────────────────────────────────────────────────────────────────────
# Factory Functions
# ─────────────────────────────────────────────────────────────────────────────

def create_bench_row(algorithm: str, n: int, m: int, k: int, seed: int, ms: float) -> BenchRow:
    """Create a benchmark row with the timing rounded to microseconds."""
    return {
        "algorithm": algorithm,
        "n": n,
        "m": m,
        "k": k,
        "seed": seed,
        "ms": round(ms, 3),
    }


def create_report_diff(position: int, expected: Optional[int], actual: Optional[int]) -> ReportDiff:
    """Create a report difference record."""
    return {"position": position, "expected": expected, "actual": actual}
