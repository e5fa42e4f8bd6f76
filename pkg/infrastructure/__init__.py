from __future__ import annotations

"""Infrastructure layer: Prometheus metrics."""

from .metrics import (
    METRICS_AVAILABLE,
    WINDOWS_TOTAL,
    CANDIDATES_VERIFIED_TOTAL,
    MATCH_SECONDS,
    FFT_FALLBACKS_TOTAL,
    start_metrics_server,
)

__all__ = [
    "METRICS_AVAILABLE",
    "WINDOWS_TOTAL",
    "CANDIDATES_VERIFIED_TOTAL",
    "MATCH_SECONDS",
    "FFT_FALLBACKS_TOTAL",
    "start_metrics_server",
]
