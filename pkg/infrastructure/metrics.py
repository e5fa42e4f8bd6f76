from __future__ import annotations

"""Prometheus metrics for the matcher, with no-op fallbacks."""

import logging

try:
    from prometheus_client import Counter, Histogram, start_http_server

    METRICS_AVAILABLE = True

    # Windows by branch: no_small_period or small_period
    WINDOWS_TOTAL = Counter("kmismatch_windows_total", "Windows matched", ["branch"])

    # Positions that passed the estimator filter and were verified exactly
    CANDIDATES_VERIFIED_TOTAL = Counter(
        "kmismatch_candidates_verified_total", "Filtered positions verified by kangaroo jumps"
    )

    MATCH_SECONDS = Histogram("kmismatch_match_seconds", "Wall time of match_all in seconds")

    FFT_FALLBACKS_TOTAL = Counter(
        "kmismatch_fft_fallbacks_total", "Windows retried with the NTT backend after a precision error"
    )

except ImportError:
    METRICS_AVAILABLE = False

    class _DummyCounter:
        def labels(self, *args, **kwargs): return self
        def inc(self, *args, **kwargs): pass

    class _DummyHistogram:
        def labels(self, *args, **kwargs): return self
        def observe(self, *args, **kwargs): pass

    WINDOWS_TOTAL = _DummyCounter()
    CANDIDATES_VERIFIED_TOTAL = _DummyCounter()
    MATCH_SECONDS = _DummyHistogram()
    FFT_FALLBACKS_TOTAL = _DummyCounter()

    def start_http_server(*args, **kwargs):  # type: ignore
        pass


def start_metrics_server(addr: str = "127.0.0.1", port: int = 8000) -> bool:
    """Expose the metrics over HTTP.

    Returns:
        True if the server was started, False if prometheus_client is missing
        or the port could not be bound.
    """
    if not METRICS_AVAILABLE:
        logging.warning("Prometheus metrics not available, metrics server not started")
        return False

    try:
        start_http_server(port, addr=addr)
        logging.info(f"Metrics server started on http://{addr}:{port}")
        return True
    except OSError as exc:
        logging.error(f"Failed to start metrics server: {exc}")
        return False
