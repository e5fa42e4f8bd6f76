"""Tests for config/settings_model.py - validation and environment overrides."""
from __future__ import annotations

import pytest
from pydantic import ValidationError

from config.settings_model import Settings


class TestSettingsValidators:
    """Field validators normalise or reject values."""

    def test_defaults(self) -> None:
        settings = Settings()
        assert settings.CONVOLUTION_BACKEND in ("fft", "ntt")
        assert 0 < settings.FFT_ROUNDING_TOLERANCE < 0.5

    def test_backend_normalised(self) -> None:
        assert Settings(CONVOLUTION_BACKEND=" NTT ").CONVOLUTION_BACKEND == "ntt"

    def test_backend_rejected(self) -> None:
        with pytest.raises(ValidationError):
            Settings(CONVOLUTION_BACKEND="dft")

    def test_algorithm_alias(self) -> None:
        assert Settings(DEFAULT_ALGORITHM="LV").DEFAULT_ALGORITHM == "landau_vishkin"

    def test_algorithm_rejected(self) -> None:
        with pytest.raises(ValidationError):
            Settings(DEFAULT_ALGORITHM="quick")

    def test_bench_alphas_range(self) -> None:
        with pytest.raises(ValidationError):
            Settings(BENCH_ALPHAS=[0.5, 1.5])

    def test_bench_algorithms_checked(self) -> None:
        with pytest.raises(ValidationError):
            Settings(BENCH_ALGORITHMS=["paper", "magic"])

    def test_log_level_upper(self) -> None:
        assert Settings(LOG_LEVEL="debug").LOG_LEVEL == "DEBUG"

    def test_tolerance_bounds(self) -> None:
        with pytest.raises(ValidationError):
            Settings(FFT_ROUNDING_TOLERANCE=0.5)


class TestEnvironmentOverrides:
    """Environment variables override defaults."""

    def test_int_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("KARLOFF_REPS_PER_LOG", "8")
        assert Settings().KARLOFF_REPS_PER_LOG == 8

    def test_period_reps_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("PERIOD_REPS_PER_LOG", "4")
        assert Settings().PERIOD_REPS_PER_LOG == 4
        monkeypatch.setenv("PERIOD_REPS_PER_LOG", "0")
        with pytest.raises(ValidationError):
            Settings()

    def test_seed_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("KMISMATCH_SEED", "42")
        assert Settings().KMISMATCH_SEED == 42

    def test_list_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("BENCH_SIZES", "[64, 128]")
        assert Settings().BENCH_SIZES == [64, 128]

    def test_invalid_env_rejected(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("MAX_WORKER_THREADS", "0")
        with pytest.raises(ValidationError):
            Settings()
