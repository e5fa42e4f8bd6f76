"""Tests for config/types.py - record factories."""
from __future__ import annotations

from config.types import BENCH_COLUMNS, create_bench_row, create_report_diff


class TestCreateBenchRow:
    """Test create_bench_row function."""

    def test_fields_follow_csv_columns(self) -> None:
        """Row keys are exactly the CSV columns, in order."""
        row = create_bench_row("paper", 8192, 4096, 64, 7, 12.5)
        assert list(row.keys()) == BENCH_COLUMNS

    def test_timing_rounded(self) -> None:
        row = create_bench_row("abrahamson", 10, 5, 1, 0, 1.23456789)
        assert row["ms"] == 1.235

    def test_values_kept(self) -> None:
        row = create_bench_row("landau_vishkin", 10, 5, 2, 3, 0.0)
        assert (row["algorithm"], row["n"], row["m"], row["k"], row["seed"]) == ("landau_vishkin", 10, 5, 2, 3)


class TestCreateReportDiff:
    """Test create_report_diff function."""

    def test_exceeds_is_none(self) -> None:
        diff = create_report_diff(4, None, 2)
        assert diff == {"position": 4, "expected": None, "actual": 2}

    def test_both_exact(self) -> None:
        diff = create_report_diff(0, 1, 3)
        assert diff["expected"] == 1
        assert diff["actual"] == 3
