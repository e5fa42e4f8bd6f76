import os
from typing import List, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Get project root directory (parent of config/ directory)
_PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

_ALGORITHMS = ("auto", "brute", "landau_vishkin", "abrahamson", "paper")


class Settings(BaseSettings):
    """
    Application configuration settings using Pydantic Settings.
    Reads from environment variables and provides type safety and validation.
    """

    # ─────────────────────────────────────────────────────────────────────────────
    # Version
    # ─────────────────────────────────────────────────────────────────────────────
    VERSION: str = "1.0.0"

    # ─────────────────────────────────────────────────────────────────────────────
    # Randomness
    # ─────────────────────────────────────────────────────────────────────────────
    KMISMATCH_SEED: int = Field(default=0, ge=0, description="Master seed when --seed is not given")

    # ─────────────────────────────────────────────────────────────────────────────
    # Estimator / filtering
    # ─────────────────────────────────────────────────────────────────────────────
    KARLOFF_REPS_PER_LOG: int = Field(default=64, ge=1, description="R = value * ceil(log2 m)")
    PERIOD_REPS_PER_LOG: int = Field(default=16, ge=1, description="R for branch detection when --reps is not given")
    FILTER_MULTIPLIER: float = Field(default=3.0, gt=0, description="Keep alignments with est <= value * k")
    PERIOD_CANDIDATE_MULTIPLIER: float = Field(default=6.0, gt=0)

    # ─────────────────────────────────────────────────────────────────────────────
    # Kernel matching
    # ─────────────────────────────────────────────────────────────────────────────
    HEAVY_THRESHOLD: Optional[int] = Field(default=None, ge=1, description="None selects ceil(sqrt(m log2 m))")
    DEFAULT_ALGORITHM: str = "auto"

    # ─────────────────────────────────────────────────────────────────────────────
    # Convolution
    # ─────────────────────────────────────────────────────────────────────────────
    CONVOLUTION_BACKEND: str = Field(default="fft", description="fft (float, guarded) or ntt (exact)")
    FFT_ROUNDING_TOLERANCE: float = Field(default=0.25, gt=0.0, lt=0.5)

    # ─────────────────────────────────────────────────────────────────────────────
    # Resource Limits
    # ─────────────────────────────────────────────────────────────────────────────
    MAX_WORKER_THREADS: int = Field(default=4, ge=1)
    VERIFY_MAX_CELLS: int = Field(default=10**8, ge=1, description="Brute oracle guard on n*m")

    # ─────────────────────────────────────────────────────────────────────────────
    # Benchmark suite
    # ─────────────────────────────────────────────────────────────────────────────
    BENCH_SIZES: List[int] = [1 << 12, 1 << 14]
    BENCH_ALPHAS: List[float] = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
    BENCH_ALGORITHMS: List[str] = ["paper", "landau_vishkin", "abrahamson"]
    BENCH_LV_MAX_WORK: int = Field(default=2 * 10**9, ge=1, description="Skip LV when n*k exceeds this")

    # ─────────────────────────────────────────────────────────────────────────────
    # Metrics
    # ─────────────────────────────────────────────────────────────────────────────
    ENABLE_METRICS: bool = False
    METRICS_ADDR: str = "127.0.0.1"
    METRICS_PORT: int = Field(default=8000, ge=1, le=65535)

    # ─────────────────────────────────────────────────────────────────────────────
    # Logging
    # ─────────────────────────────────────────────────────────────────────────────
    LOG_DIR: str = Field(default=_PROJECT_ROOT)
    LOG_FILE: str = Field(default_factory=lambda: os.path.join(_PROJECT_ROOT, "kmismatch.log"))
    LOG_LEVEL: str = "INFO"
    LOG_TRUNCATE_ON_START: bool = True

    @field_validator("CONVOLUTION_BACKEND")
    @classmethod
    def validate_backend(cls, v: str) -> str:
        """Only the float FFT and the exact NTT backends exist."""
        v = v.strip().lower()
        if v not in ("fft", "ntt"):
            raise ValueError(f"Invalid convolution backend: '{v}'. Use 'fft' or 'ntt'.")
        return v

    @field_validator("DEFAULT_ALGORITHM")
    @classmethod
    def validate_algorithm(cls, v: str) -> str:
        v = v.strip().lower()
        if v == "lv":
            v = "landau_vishkin"
        if v not in _ALGORITHMS:
            raise ValueError(f"Unknown algorithm: '{v}'")
        return v

    @field_validator("BENCH_ALGORITHMS")
    @classmethod
    def validate_bench_algorithms(cls, v: List[str]) -> List[str]:
        unknown = [name for name in v if name not in _ALGORITHMS]
        if unknown:
            raise ValueError(f"Unknown bench algorithms: {', '.join(unknown)}")
        return v

    @field_validator("BENCH_ALPHAS")
    @classmethod
    def validate_alphas(cls, v: List[float]) -> List[float]:
        if any(a <= 0.0 or a > 1.0 for a in v):
            raise ValueError("BENCH_ALPHAS must lie in (0, 1]")
        return v

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        v = v.strip().upper()
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Invalid log level: '{v}'")
        return v

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )
