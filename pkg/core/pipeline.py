"""
Top-level k-mismatch matcher.

The text is cut into windows of length 2m starting every m positions; window
``w`` owns alignments ``w*m .. w*m + m - 1``.  The pattern's period verdict is
computed once and shared by all windows, each window then takes one of two
branches:

* no small period: estimate every alignment, keep those with
  ``est <= filter_threshold_multiplier * k`` and verify them with kangaroo
  jumps;
* small period ``ell``: trim the window, rearrange it together with the
  pattern and count mismatches exactly on the run-length compressed pair.

Reported distances are exact in both branches; only a missed alignment
depends on the estimator.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from config import (
    CONVOLUTION_BACKEND,
    DEFAULT_ALGORITHM,
    FILTER_MULTIPLIER,
    HEAVY_THRESHOLD,
    KMISMATCH_SEED,
    MAX_WORKER_THREADS,
    PERIOD_CANDIDATE_MULTIPLIER,
    PERIOD_REPS_PER_LOG,
)
from core.convolution import abrahamson_distances, make_plan
from core.errors import InvalidParameterError, PrecisionError
from core.karloff import default_repetitions, estimate_distances
from core.kernel import NoSmallPeriod, PeriodVerdict, SmallPeriod, detect_period, rearrange, trim_text
from core.lce import LceIndex, landau_vishkin, verify_many
from core.oracle import EXCEEDS, DistanceReport, brute_distances
from core.rle_match import kernel_distances
from core.strings import TEXT_SENTINEL, SymbolString
from infrastructure.metrics import (
    CANDIDATES_VERIFIED_TOTAL,
    FFT_FALLBACKS_TOTAL,
    MATCH_SECONDS,
    WINDOWS_TOTAL,
)

logger = logging.getLogger(__name__)

Algorithm = Literal["auto", "brute", "landau_vishkin", "abrahamson", "paper"]
ALGORITHMS: tuple[str, ...] = ("auto", "brute", "landau_vishkin", "abrahamson", "paper")


class MatchConfig(BaseModel):
    """Parameters of one matching run; unset fields fall back to settings."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=0)
    R: Optional[int] = Field(default=None, ge=1)
    seed: int = Field(default=KMISMATCH_SEED, ge=0)
    t: Optional[int] = Field(default=HEAVY_THRESHOLD, ge=1)
    algorithm: Algorithm = DEFAULT_ALGORITHM  # type: ignore[assignment]
    filter_threshold_multiplier: float = Field(default=FILTER_MULTIPLIER, gt=0)
    candidate_multiplier: float = Field(default=PERIOD_CANDIDATE_MULTIPLIER, gt=0)
    backend: Literal["fft", "ntt"] = CONVOLUTION_BACKEND  # type: ignore[assignment]
    threads: int = Field(default=MAX_WORKER_THREADS, ge=1)

    @field_validator("algorithm", mode="before")
    @classmethod
    def _expand_alias(cls, v: str) -> str:
        return "landau_vishkin" if v == "lv" else v

    def repetitions(self, m: int) -> int:
        return self.R if self.R is not None else default_repetitions(m)

    def period_repetitions(self, m: int) -> int:
        """R for branch detection; an explicit R is used for both stages."""
        return self.R if self.R is not None else default_repetitions(m, PERIOD_REPS_PER_LOG)


def window_seed(seed: int, w: int) -> int:
    """Per-window seed derived from the master seed and the window index."""
    return int(np.random.SeedSequence([seed, w]).generate_state(1)[0])


# ─────────────────────────────────────────────────────────────────────────────
# Branch detection with exact fallback
# ─────────────────────────────────────────────────────────────────────────────

def pattern_verdict(pattern: SymbolString, cfg: MatchConfig) -> PeriodVerdict:
    """detect_period with the configured parameters, retried on NTT after a precision error."""
    m = len(pattern)
    lce = LceIndex(pattern, pattern, cfg.seed)
    try:
        return detect_period(
            pattern, cfg.k, cfg.period_repetitions(m), cfg.seed, lce,
            candidate_multiplier=cfg.candidate_multiplier, backend=cfg.backend,
        )
    except PrecisionError as exc:
        logger.warning(f"Self-estimates lost precision ({exc.worst_deviation:.3f}), retrying with NTT")
        FFT_FALLBACKS_TOTAL.inc()
        return detect_period(
            pattern, cfg.k, cfg.period_repetitions(m), cfg.seed, lce,
            candidate_multiplier=cfg.candidate_multiplier, backend="ntt",
        )


# ─────────────────────────────────────────────────────────────────────────────
# One window
# ─────────────────────────────────────────────────────────────────────────────

def _filter_and_verify(window: SymbolString, pattern: SymbolString, cfg: MatchConfig, seed: int) -> np.ndarray:
    m = len(pattern)
    plan = make_plan(len(window), m, cfg.backend)
    estimate = estimate_distances(window, pattern, cfg.repetitions(m), seed, plan)
    keep = estimate.positions_within(cfg.filter_threshold_multiplier * cfg.k)
    out = np.full(len(window) - m + 1, EXCEEDS, dtype=np.int64)
    if keep.size:
        idx = LceIndex(pattern, window, seed)
        out[keep] = verify_many(idx, keep, cfg.k)
    CANDIDATES_VERIFIED_TOTAL.inc(int(keep.size))
    logger.debug(f"window: {keep.size} of {out.size} positions kept for verification")
    return out


def _kernelized(window: SymbolString, pattern: SymbolString, cfg: MatchConfig, verdict: SmallPeriod) -> np.ndarray:
    m = len(pattern)
    ell, k = verdict.ell, cfg.k
    out = np.full(len(window) - m + 1, EXCEEDS, dtype=np.int64)
    budget = ell + verdict.distance + 2 * k
    t_prime, offset = trim_text(window, ell, k, budget=budget, split=m)
    if len(t_prime) < m:
        return out

    padding = SymbolString.filled(TEXT_SENTINEL, (-m) % ell)
    inst = rearrange(SymbolString.concat([t_prime, padding]), pattern, ell, k)
    inst = replace(inst, t_prime_offset=offset)
    report = kernel_distances(inst, k, cfg.t, cfg.backend)
    count = len(t_prime) - m + 1
    out[offset : offset + count] = report.distances[:count]
    logger.debug(f"window: ell={ell}, |T'|={len(t_prime)} at {offset}, |T*|={len(inst.t_star)}")
    return out


def window_match(
    window: SymbolString,
    pattern: SymbolString,
    cfg: MatchConfig,
    verdict: PeriodVerdict | None = None,
    seed: int | None = None,
) -> DistanceReport:
    """Report for every alignment of ``pattern`` inside a window of length m..2m."""
    m = len(pattern)
    if not m <= len(window) <= 2 * m:
        raise InvalidParameterError(f"window length {len(window)} outside [{m}, {2 * m}]")
    if verdict is None:
        verdict = pattern_verdict(pattern, cfg)
    seed = cfg.seed if seed is None else seed

    def run(active: MatchConfig) -> np.ndarray:
        if isinstance(verdict, SmallPeriod):
            return _kernelized(window, pattern, active, verdict)
        return _filter_and_verify(window, pattern, active, seed)

    try:
        distances = run(cfg)
    except PrecisionError as exc:
        logger.warning(f"FFT precision error ({exc.worst_deviation:.3f}), retrying window with NTT")
        FFT_FALLBACKS_TOTAL.inc()
        distances = run(cfg.model_copy(update={"backend": "ntt"}))

    branch = "small_period" if isinstance(verdict, SmallPeriod) else "no_small_period"
    WINDOWS_TOTAL.labels(branch=branch).inc()
    return DistanceReport(distances, cfg.k)


# ─────────────────────────────────────────────────────────────────────────────
# Whole text
# ─────────────────────────────────────────────────────────────────────────────

def _windowed(text: SymbolString, pattern: SymbolString, cfg: MatchConfig) -> DistanceReport:
    n, m = len(text), len(pattern)
    count = n - m + 1
    verdict = pattern_verdict(pattern, cfg)
    if isinstance(verdict, SmallPeriod):
        logger.debug(f"pattern has a 4k-period {verdict.ell} (distance {verdict.distance})")
    starts = list(range(0, count, m))

    def job(w: int) -> np.ndarray:
        start = starts[w]
        window = text.slice(start, min(start + 2 * m, n))
        owned = min(m, count - start)
        report = window_match(window, pattern, cfg, verdict, window_seed(cfg.seed, w))
        return report.distances[:owned]

    if cfg.threads == 1 or len(starts) == 1:
        parts = [job(w) for w in range(len(starts))]
    else:
        with ThreadPoolExecutor(max_workers=cfg.threads, thread_name_prefix="kmismatch_") as executor:
            parts = list(executor.map(job, range(len(starts))))
    logger.info(f"Matched {len(starts)} windows ({'small period' if isinstance(verdict, SmallPeriod) else 'filtered'})")
    return DistanceReport(np.concatenate(parts), cfg.k)


def match_all(text: SymbolString, pattern: SymbolString, cfg: MatchConfig) -> DistanceReport:
    """Exact distance (or EXCEEDS) for every alignment 0 .. n - m."""
    n, m = len(text), len(pattern)
    if m == 0:
        raise InvalidParameterError("pattern must not be empty")
    if m > n:
        raise InvalidParameterError(f"pattern longer than text ({m} > {n})")
    text.check_text()
    pattern.check_pattern()

    started = time.perf_counter()
    algorithm = cfg.algorithm
    if algorithm in ("auto", "paper") and cfg.k >= m:
        logger.info(f"k={cfg.k} >= m={m}, every alignment is reportable; using abrahamson")
        algorithm = "abrahamson"

    if algorithm == "brute":
        report = brute_distances(text, pattern, cfg.k)
    elif algorithm == "landau_vishkin":
        report = landau_vishkin(text, pattern, cfg.k, cfg.seed)
    elif algorithm == "abrahamson":
        try:
            exact = abrahamson_distances(text, pattern, cfg.t, cfg.backend)
        except PrecisionError:
            logger.warning("FFT precision error in abrahamson, retrying with NTT")
            FFT_FALLBACKS_TOTAL.inc()
            exact = abrahamson_distances(text, pattern, cfg.t, "ntt")
        report = DistanceReport.from_exact(exact, cfg.k)
    else:
        report = _windowed(text, pattern, cfg)

    elapsed = time.perf_counter() - started
    MATCH_SECONDS.observe(elapsed)
    logger.info(f"match_all: n={n}, m={m}, k={cfg.k}, algorithm={algorithm}, {elapsed * 1000:.1f} ms")
    return report
