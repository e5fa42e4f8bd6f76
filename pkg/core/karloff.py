"""
Approximate mismatch counting by random binary projections.

Each repetition maps every symbol independently to a uniform bit and counts
the binary mismatches of the projected strings.  Two distinct symbols collide
with probability 1/2, so twice the mean count over R repetitions is an
unbiased estimate of the Hamming distance.  Projected bits are handled as
+1/-1 values: for an overlap of length L the binary mismatches are
(L - correlation) / 2, and summing the R correlations in the frequency domain
costs one inverse transform per call.

The text sentinel projects to a fresh bit per repetition and the pattern
sentinel to its complement, so the pair always mismatches.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from config import FFT_ROUNDING_TOLERANCE, KARLOFF_REPS_PER_LOG
from core import ntt
from core.convolution import CorrelationPlan, make_plan, smooth_size, transform_size
from core.errors import InvalidParameterError, PrecisionError
from core.strings import PAT_SENTINEL, TEXT_SENTINEL, SymbolString

logger = logging.getLogger(__name__)

# Upper bound on float64 cells held by one batch of projected rows.
_BATCH_CELLS = 1 << 23


@dataclass(frozen=True, eq=False)
class Estimate:
    """Estimated distances; ``values[x]`` belongs to alignment (or shift) ``first + x``."""

    values: np.ndarray
    repetitions: int
    seed: int
    first: int = 0

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.size and float(arr.min()) < 0:
            raise InvalidParameterError("estimates must be non-negative")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def at(self, x: int) -> float:
        return float(self.values[x - self.first])

    def positions_within(self, bound: float) -> np.ndarray:
        """Alignments (or shifts) whose estimate is at most ``bound``, ascending."""
        return np.flatnonzero(self.values <= bound) + self.first


def default_repetitions(m: int, per_log: int = KARLOFF_REPS_PER_LOG) -> int:
    """per_log * ceil(log2 m)."""
    return per_log * max(1, math.ceil(math.log2(max(m, 2))))


def _generator(seed: int, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, stream])))


def _dense_ranks(*strings: np.ndarray) -> tuple[list[np.ndarray], int]:
    """Rank real symbols 0..sigma-1; text sentinel -> sigma, pattern sentinel -> sigma+1."""
    joined = np.concatenate(strings)
    real = joined[(joined != TEXT_SENTINEL) & (joined != PAT_SENTINEL)]
    alphabet = np.unique(real)
    sigma = int(alphabet.size)
    ranked = []
    for arr in strings:
        r = np.searchsorted(alphabet, arr)
        r = np.where(arr == TEXT_SENTINEL, sigma, r)
        r = np.where(arr == PAT_SENTINEL, sigma + 1, r)
        ranked.append(r)
    return ranked, sigma


def _sign_tables(rng: np.random.Generator, rows: int, sigma: int) -> np.ndarray:
    """(rows, sigma+2) table of +1/-1 projections with the sentinel pair complementary."""
    bits = rng.integers(0, 2, size=(rows, sigma + 1), dtype=np.int8)
    table = np.empty((rows, sigma + 2), dtype=np.float64)
    table[:, : sigma + 1] = 1 - 2 * bits
    table[:, sigma + 1] = -table[:, sigma]
    return table


def _batches(total: int, width: int) -> list[int]:
    chunk = max(1, _BATCH_CELLS // max(width, 1))
    return [min(chunk, total - start) for start in range(0, total, chunk)]


def estimate_distances(
    text: SymbolString,
    pattern: SymbolString,
    R: int,
    seed: int,
    plan: CorrelationPlan | None = None,
) -> Estimate:
    """Per-alignment estimate (2/R) * sum_r (binary mismatches under projection r)."""
    if R < 1:
        raise InvalidParameterError("R must be >= 1")
    n, m = len(text), len(pattern)
    plan = plan or make_plan(n, m)
    (t_rank, p_rank), sigma = _dense_ranks(text.symbols, pattern.symbols)
    rng = _generator(seed, 0x4B)

    if plan.backend == "ntt":
        corr_sum = np.zeros(plan.alignments, dtype=np.int64)
        for rows in _batches(R, plan.size):
            table = _sign_tables(rng, rows, sigma).astype(np.int64)
            corr_sum += plan.correlate_rows(table[:, t_rank], table[:, p_rank]).sum(axis=0)
    else:
        spectrum = np.zeros(plan.size // 2 + 1, dtype=np.complex128)
        for rows in _batches(R, plan.size):
            table = _sign_tables(rng, rows, sigma)
            product = plan.text_spectrum(table[:, t_rank]) * plan.pattern_spectrum(table[:, p_rank])
            spectrum += product.sum(axis=0)
        corr_sum = plan.finish(spectrum)

    values = (R * m - corr_sum) / R
    logger.debug(f"estimate_distances: n={n}, m={m}, R={R}")
    return Estimate(values, R, seed)


def self_estimates(
    pattern: SymbolString,
    max_shift: int,
    R: int,
    seed: int,
    backend: str = "fft",
    tolerance: float = FFT_ROUNDING_TOLERANCE,
) -> Estimate:
    """Estimates of Ham(P[pi:], P[:m-pi]) for pi in 1..max_shift (``first`` = 1)."""
    m = len(pattern)
    if R < 1:
        raise InvalidParameterError("R must be >= 1")
    if not 0 <= max_shift < m:
        raise InvalidParameterError(f"max_shift must lie in [0, {m}), got {max_shift}")
    if max_shift == 0:
        return Estimate(np.empty(0), R, seed, first=1)

    (p_rank,), sigma = _dense_ranks(pattern.symbols)
    rng = _generator(seed, 0x5E1F)
    shifts = np.arange(1, max_shift + 1)

    if backend == "ntt":
        size = transform_size(m, m)
        ac_sum = np.zeros(max_shift, dtype=np.int64)
        for rows in _batches(R, size):
            table = _sign_tables(rng, rows, sigma).astype(np.int64)
            for x in table[:, p_rank]:
                ac_sum += ntt.convolve(x, x[::-1], size)[m - 1 + shifts]
    else:
        # lags up to max_shift do not wrap around a cyclic length of m + max_shift
        size = smooth_size(m + max_shift)
        power = np.zeros(size // 2 + 1, dtype=np.float64)
        for rows in _batches(R, size):
            x = _sign_tables(rng, rows, sigma)[:, p_rank]
            power += (np.abs(np.fft.rfft(x, size, axis=-1)) ** 2).sum(axis=0)
        raw = np.fft.irfft(power, size)[shifts]
        rounded = np.rint(raw)
        worst = float(np.max(np.abs(raw - rounded)))
        if worst > tolerance:
            raise PrecisionError(f"autocorrelation deviates {worst:.3f} from an integer", worst)
        ac_sum = rounded.astype(np.int64)

    values = ((m - shifts) * R - ac_sum) / R
    return Estimate(values, R, seed, first=1)
