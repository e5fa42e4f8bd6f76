"""
Configuration package for kmismatch.

This package provides:
- settings: Application configuration variables
- i18n: Internationalization (translations)
- types: TypedDict classes and factory functions

Usage:
    from config import VERSION, KMISMATCH_SEED, t, create_bench_row
"""

# Version
from .settings import VERSION

# Language
from .settings import CURRENT_LANGUAGE, SUPPORTED_LANGUAGES

# Randomness
from .settings import KMISMATCH_SEED

# Estimator / filtering
from .settings import (
    KARLOFF_REPS_PER_LOG,
    PERIOD_REPS_PER_LOG,
    FILTER_MULTIPLIER,
    PERIOD_CANDIDATE_MULTIPLIER,
)

# Kernel matching
from .settings import HEAVY_THRESHOLD, DEFAULT_ALGORITHM

# Convolution
from .settings import CONVOLUTION_BACKEND, FFT_ROUNDING_TOLERANCE

# Resource limits
from .settings import MAX_WORKER_THREADS, VERIFY_MAX_CELLS

# Benchmark suite
from .settings import (
    BENCH_SIZES,
    BENCH_ALPHAS,
    BENCH_ALGORITHMS,
    BENCH_LV_MAX_WORK,
)

# Metrics
from .settings import ENABLE_METRICS, METRICS_ADDR, METRICS_PORT

# Logging
from .settings import LOG_DIR, LOG_FILE, LOG_LEVEL, LOG_TRUNCATE_ON_START

# i18n
from .i18n import LANG, t

# Types and factories
from .types import (
    BENCH_COLUMNS,
    BenchRow,
    ReportDiff,
    create_bench_row,
    create_report_diff,
)

__all__ = [
    "VERSION",
    "CURRENT_LANGUAGE",
    "SUPPORTED_LANGUAGES",
    "KMISMATCH_SEED",
    "KARLOFF_REPS_PER_LOG",
    "PERIOD_REPS_PER_LOG",
    "FILTER_MULTIPLIER",
    "PERIOD_CANDIDATE_MULTIPLIER",
    "HEAVY_THRESHOLD",
    "DEFAULT_ALGORITHM",
    "CONVOLUTION_BACKEND",
    "FFT_ROUNDING_TOLERANCE",
    "MAX_WORKER_THREADS",
    "VERIFY_MAX_CELLS",
    "BENCH_SIZES",
    "BENCH_ALPHAS",
    "BENCH_ALGORITHMS",
    "BENCH_LV_MAX_WORK",
    "ENABLE_METRICS",
    "METRICS_ADDR",
    "METRICS_PORT",
    "LOG_DIR",
    "LOG_FILE",
    "LOG_LEVEL",
    "LOG_TRUNCATE_ON_START",
    "LANG",
    "t",
    "BENCH_COLUMNS",
    "BenchRow",
    "ReportDiff",
    "create_bench_row",
    "create_report_diff",
]
