"""Colour constants for the terminal output."""

from __future__ import annotations

ACCENT = "bold cyan"
TEXT_DIM = "dim"
GREEN = "green"
RED = "bold red"

DOT_OK = "●"
DOT_FAIL = "▲"
