"""UI package: rich tables for verify and bench output."""

from ui.tables import bench_table, diff_table  # noqa: F401

__all__ = ["bench_table", "diff_table"]
