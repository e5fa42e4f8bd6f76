"""Rich tables for the verify diff and the benchmark summary."""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from rich.table import Table

from config import BenchRow, ReportDiff, t
from ui.theme import ACCENT, GREEN, RED, TEXT_DIM

# Diffs beyond this many rows are summarised by the caller.
MAX_DIFF_ROWS = 50


def _cell(value: int | None) -> str:
    return "-" if value is None else str(value)


def diff_table(diffs: Sequence[ReportDiff]) -> Table:
    table = Table(title=t("verify_title"), title_style=ACCENT, header_style=ACCENT)
    table.add_column(t("col_position"), justify="right")
    table.add_column(t("col_expected"), justify="right", style=GREEN)
    table.add_column(t("col_actual"), justify="right", style=RED)
    for diff in diffs[:MAX_DIFF_ROWS]:
        table.add_row(str(diff["position"]), _cell(diff["expected"]), _cell(diff["actual"]))
    if len(diffs) > MAX_DIFF_ROWS:
        table.add_row("…", f"+{len(diffs) - MAX_DIFF_ROWS}", "", style=TEXT_DIM)
    return table


def bench_table(rows: Sequence[BenchRow]) -> Table:
    """Per-algorithm instance count, total and worst wall time."""
    totals: dict[str, list[float]] = defaultdict(list)
    for row in rows:
        totals[row["algorithm"]].append(row["ms"])

    table = Table(title=t("bench_title"), title_style=ACCENT, header_style=ACCENT)
    table.add_column(t("col_algorithm"))
    table.add_column(t("col_instances"), justify="right")
    table.add_column(t("col_total_ms"), justify="right")
    table.add_column(t("col_max_ms"), justify="right")
    for algorithm, times in totals.items():
        table.add_row(algorithm, str(len(times)), f"{sum(times):.1f}", f"{max(times):.1f}")
    return table
