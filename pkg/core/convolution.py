"""
Cross-correlation engine.

Every per-alignment count in the package (heavy-letter matches, binary
projections for the estimator, the Abrahamson baseline) goes through a
``CorrelationPlan``.  The floating-point backend rounds its output and raises
``PrecisionError`` when any value lands farther than the plan's tolerance
from an integer; callers that want the exact path retry with ``backend="ntt"``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from config import CONVOLUTION_BACKEND, FFT_ROUNDING_TOLERANCE
from core import ntt
from core.errors import InvalidParameterError, PrecisionError
from core.strings import SymbolString, is_sentinel

logger = logging.getLogger(__name__)

Backend = Literal["fft", "ntt"]


def transform_size(n: int, m: int) -> int:
    """Smallest power of two >= n + m."""
    return 1 << max(0, (n + m - 1).bit_length())


def smooth_size(target: int) -> int:
    """Smallest 2^a 3^b 5^c >= target."""
    target = max(1, target)
    best = 1 << max(0, (target - 1).bit_length())
    p5 = 1
    while p5 < best:
        p35 = p5
        while p35 < best:
            size = p35 << max(0, (-(-target // p35) - 1).bit_length())
            best = min(best, size)
            p35 *= 3
        p5 *= 5
    return best


def default_threshold(m: int) -> int:
    """ceil(sqrt(m log2 m)), at least 1."""
    return max(1, math.ceil(math.sqrt(m * math.log2(max(m, 2)))))


@dataclass(frozen=True)
class CorrelationPlan:
    """Correlation of a length-n text against a length-m pattern.

    Immutable; scratch arrays are allocated per call.
    """

    n: int
    m: int
    backend: Backend = "fft"
    tolerance: float = FFT_ROUNDING_TOLERANCE
    size: int = field(init=False)

    def __post_init__(self) -> None:
        if self.m < 1 or self.m > self.n:
            raise InvalidParameterError(f"need 1 <= m <= n, got n={self.n}, m={self.m}")
        if self.backend not in ("fft", "ntt"):
            raise InvalidParameterError(f"unknown convolution backend {self.backend!r}")
        if not 0 < self.tolerance < 0.5:
            raise InvalidParameterError("rounding tolerance must lie in (0, 0.5)")
        object.__setattr__(self, "size", transform_size(self.n, self.m))

    @property
    def alignments(self) -> int:
        return self.n - self.m + 1

    # ── spectra ──────────────────────────────────────────────────────────

    def text_spectrum(self, values: np.ndarray) -> np.ndarray:
        return np.fft.rfft(np.asarray(values, dtype=np.float64), self.size, axis=-1)

    def pattern_spectrum(self, values: np.ndarray) -> np.ndarray:
        reversed_values = np.asarray(values, dtype=np.float64)[..., ::-1]
        return np.fft.rfft(reversed_values, self.size, axis=-1)

    def finish(self, product: np.ndarray) -> np.ndarray:
        """Inverse transform of a spectrum product, sliced to alignments and rounded."""
        raw = np.fft.irfft(product, self.size, axis=-1)[..., self.m - 1 : self.n]
        rounded = np.rint(raw)
        worst = float(np.max(np.abs(raw - rounded))) if raw.size else 0.0
        if worst > self.tolerance:
            raise PrecisionError(
                f"FFT correlation deviates {worst:.3f} from an integer (size {self.size})",
                worst,
            )
        return rounded.astype(np.int64)

    # ── correlation ──────────────────────────────────────────────────────

    def correlate(self, text_values: np.ndarray, pattern_values: np.ndarray) -> np.ndarray:
        """out[i] = sum_j text[i+j] * pattern[j] over all alignments."""
        if self.backend == "ntt":
            return ntt.correlate(np.asarray(text_values), np.asarray(pattern_values), self.size)
        return self.finish(self.text_spectrum(text_values) * self.pattern_spectrum(pattern_values))

    def correlate_rows(self, text_rows: np.ndarray, pattern_rows: np.ndarray) -> np.ndarray:
        """Row-wise ``correlate`` for two (R, n) / (R, m) stacks."""
        if self.backend == "ntt":
            return np.stack([self.correlate(t, p) for t, p in zip(text_rows, pattern_rows)])
        return self.finish(self.text_spectrum(text_rows) * self.pattern_spectrum(pattern_rows))


def make_plan(n: int, m: int, backend: Backend | None = None) -> CorrelationPlan:
    return CorrelationPlan(n, m, backend or CONVOLUTION_BACKEND)


# ─────────────────────────────────────────────────────────────────────────────
# Symbol matches
# ─────────────────────────────────────────────────────────────────────────────

def _check_lengths(text: SymbolString, pattern: SymbolString) -> None:
    if len(pattern) == 0:
        raise InvalidParameterError("pattern must not be empty")
    if len(pattern) > len(text):
        raise InvalidParameterError(f"pattern longer than text ({len(pattern)} > {len(text)})")


def count_symbol_matches(
    text: SymbolString,
    pattern: SymbolString,
    c: int,
    plan: CorrelationPlan | None = None,
) -> np.ndarray:
    """Per alignment i, the number of j with text[i+j] == pattern[j] == c."""
    if is_sentinel(c):
        raise InvalidParameterError("sentinels never match; count_symbol_matches needs a real symbol")
    _check_lengths(text, pattern)
    plan = plan or make_plan(len(text), len(pattern))
    return plan.correlate(text.symbols == c, pattern.symbols == c)


class SymbolCorrelator:
    """Sums per-symbol match correlations of one (text, pattern) pair.

    Pattern spectra are cached per symbol, so repeated queries over the same
    pattern only transform the text side again.
    """

    def __init__(self, text: SymbolString, pattern: SymbolString, plan: CorrelationPlan | None = None):
        _check_lengths(text, pattern)
        self.text = text
        self.pattern = pattern
        self.plan = plan or make_plan(len(text), len(pattern))
        self._pattern_spectra: dict[int, np.ndarray] = {}

    def _pattern_spectrum(self, c: int) -> np.ndarray:
        spectrum = self._pattern_spectra.get(c)
        if spectrum is None:
            spectrum = self.plan.pattern_spectrum(self.pattern.symbols == c)
            self._pattern_spectra[c] = spectrum
        return spectrum

    def matches(self, symbols: Iterable[int]) -> np.ndarray:
        """Total matches contributed by ``symbols`` at every alignment."""
        symbols = [int(c) for c in symbols if not is_sentinel(int(c))]
        if not symbols:
            return np.zeros(self.plan.alignments, dtype=np.int64)
        if self.plan.backend == "ntt":
            total = np.zeros(self.plan.alignments, dtype=np.int64)
            for c in symbols:
                total += self.plan.correlate(self.text.symbols == c, self.pattern.symbols == c)
            return total
        product = np.zeros(self.plan.size // 2 + 1, dtype=np.complex128)
        for c in symbols:
            product += self.plan.text_spectrum(self.text.symbols == c) * self._pattern_spectrum(c)
        return self.plan.finish(product)


def count_binary_mismatches(
    text01: SymbolString,
    pattern01: SymbolString,
    plan: CorrelationPlan | None = None,
) -> np.ndarray:
    """Hamming distance of binary windows via 1-vs-0 and 0-vs-1 correlations."""
    _check_lengths(text01, pattern01)
    for name, s in (("text", text01), ("pattern", pattern01)):
        if s.symbols.size and not np.isin(s.symbols, (0, 1)).all():
            raise InvalidParameterError(f"{name} must be over {{0, 1}}")
    plan = plan or make_plan(len(text01), len(pattern01))
    t1 = text01.symbols == 1
    p1 = pattern01.symbols == 1
    return plan.correlate(t1, ~p1) + plan.correlate(~t1, p1)


# ─────────────────────────────────────────────────────────────────────────────
# Abrahamson baseline
# ─────────────────────────────────────────────────────────────────────────────

def light_matches(
    text: SymbolString,
    pattern: SymbolString,
    light: np.ndarray,
) -> np.ndarray:
    """Matches contributed by ``light`` symbols, by walking their pattern positions.

    Round r pairs every text position of a light symbol with the r-th
    pattern occurrence of that symbol, so the work is
    sum_c occ_text(c) * occ_pattern(c).
    """
    n, m = len(text), len(pattern)
    count = n - m + 1
    out = np.zeros(count, dtype=np.int64)
    light = np.asarray(light, dtype=np.int64)
    if light.size == 0:
        return out

    p = pattern.symbols
    order = np.argsort(p, kind="stable")
    sorted_p = p[order]
    uniq, group_start, group_size = np.unique(sorted_p, return_index=True, return_counts=True)

    t = text.symbols
    slot = np.searchsorted(uniq, t)
    slot_clipped = np.minimum(slot, uniq.size - 1)
    keep = (uniq[slot_clipped] == t) & np.isin(t, light)
    q = np.flatnonzero(keep)
    if q.size == 0:
        return out
    starts = group_start[slot_clipped[q]]
    sizes = group_size[slot_clipped[q]]

    for r in range(int(sizes.max())):
        sel = sizes > r
        q, starts, sizes = q[sel], starts[sel], sizes[sel]
        offsets = q - order[starts + r]
        offsets = offsets[(offsets >= 0) & (offsets < count)]
        out += np.bincount(offsets, minlength=count)
    return out


def abrahamson_distances(
    text: SymbolString,
    pattern: SymbolString,
    threshold: int | None = None,
    backend: Backend | None = None,
) -> np.ndarray:
    """Exact distance at every alignment.

    Symbols occurring more than ``threshold`` times in the pattern are
    counted by correlation, the rest by their position lists.
    """
    _check_lengths(text, pattern)
    m = len(pattern)
    threshold = default_threshold(m) if threshold is None else threshold
    if threshold < 1:
        raise InvalidParameterError("threshold must be >= 1")

    symbols, occurrences = np.unique(pattern.symbols, return_counts=True)
    real = np.array([not is_sentinel(int(c)) for c in symbols], dtype=bool)
    heavy = symbols[real & (occurrences > threshold)]
    light = symbols[real & (occurrences <= threshold)]
    logger.debug(f"abrahamson: m={m}, threshold={threshold}, heavy={heavy.size}, light={light.size}")

    matches = SymbolCorrelator(text, pattern, make_plan(len(text), m, backend)).matches(heavy.tolist())
    matches = matches + light_matches(text, pattern, light)
    return m - matches
