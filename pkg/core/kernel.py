"""
Kernelization of one window: branch detection, trimming and rearrangement.

A pattern either has no x-period below k worth exploiting, or it has a
verified 4k-period ``ell <= k``.  In the latter case the window is trimmed to
the part ``T'`` that can host a k-occurrence and both strings are rewritten
as ell-encodings so that each compresses to O(k) runs::

    T* = <T'>_ell <T''>_ell,  T'' = T'[ell:] #^ell
    P* = <P $^((m1 - m2) * ell)>_ell

Alignment ``alpha`` of ``P`` in ``T'`` corresponds to alignment
``alpha // ell + (alpha % ell) * m1`` of ``P*`` in ``T*``, where the star
distance exceeds the original one by exactly ``(m1 - m2) * ell``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from config import PERIOD_CANDIDATE_MULTIPLIER
from core.errors import InvalidParameterError
from core.karloff import self_estimates
from core.lce import LceIndex
from core.strings import (
    PAT_SENTINEL,
    TEXT_SENTINEL,
    SymbolString,
    ell_encoding,
    runs_count,
    x_period_distance,
)

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────────────────────────
# Period detection
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class NoSmallPeriod:
    """No shift in [1, k] is a verified 4k-period of the pattern."""


@dataclass(frozen=True)
class SmallPeriod:
    """``ell`` is a 4k-period of the pattern with exact self-distance ``distance``."""

    ell: int
    distance: int


PeriodVerdict = Union[NoSmallPeriod, SmallPeriod]


def detect_period(
    pattern: SymbolString,
    k: int,
    R: int,
    seed: int,
    lce: LceIndex | None = None,
    *,
    candidate_multiplier: float = PERIOD_CANDIDATE_MULTIPLIER,
    backend: str = "fft",
) -> PeriodVerdict:
    """Scan estimated self-distances for shifts 1..k and verify candidates exactly.

    ``lce`` must index the pattern against itself; one is built when omitted.
    Candidates are taken in increasing shift order and the first one whose
    exact distance is at most 4k wins.
    """
    m = len(pattern)
    if not 0 <= k < m:
        raise InvalidParameterError(f"detect_period needs 0 <= k < m, got k={k}, m={m}")
    if k == 0:
        return NoSmallPeriod()
    if lce is None:
        lce = LceIndex(pattern, pattern, seed)
    elif lce.m != m or lce.n != m:
        raise InvalidParameterError("detect_period needs an LCE index of the pattern against itself")

    estimate = self_estimates(pattern, k, R, seed, backend=backend)
    candidates = estimate.positions_within(candidate_multiplier * k)
    cap = 4 * k
    for pi in candidates.tolist():
        distance = lce.mismatches(0, pi, m - pi, cap)
        if distance is not None:
            logger.debug(f"detect_period: shift {pi} verified, distance {distance} "
                         f"({candidates.size} candidates)")
            return SmallPeriod(pi, distance)
    logger.debug(f"detect_period: no small period among {candidates.size} candidates")
    return NoSmallPeriod()


def minimal_x_period(pattern: SymbolString, x: int, limit: int) -> int | None:
    """Smallest shift in [1, limit] whose exact self-distance is at most ``x``."""
    for pi in range(1, min(limit, len(pattern) - 1) + 1):
        if x_period_distance(pattern, pi, x) is not None:
            return pi
    return None


def occurrence_spacing_ok(positions: np.ndarray, ell: int) -> bool:
    """Whether consecutive occurrence positions are at least ``ell`` apart.

    Holds for k-occurrences whenever the pattern's minimal 2k-period is ``ell``.
    """
    positions = np.sort(np.asarray(positions, dtype=np.int64))
    return bool(positions.size < 2 or np.diff(positions).min() >= ell)


# ─────────────────────────────────────────────────────────────────────────────
# Trimming
# ─────────────────────────────────────────────────────────────────────────────

def _suffix_runs(arr: np.ndarray, ell: int) -> np.ndarray:
    """runs_ell(arr[j:]) for every j in [0, len(arr)]."""
    size = arr.shape[0]
    counts = np.zeros(size + 1, dtype=np.int64)
    if size > ell:
        neq = (arr[:-ell] != arr[ell:]).astype(np.int64)
        counts[: size - ell] = np.cumsum(neq[::-1])[::-1]
    return np.minimum(ell, size - np.arange(size + 1)) + counts


def _prefix_runs(arr: np.ndarray, ell: int) -> np.ndarray:
    """runs_ell(arr[:e]) for every e in [0, len(arr)]."""
    size = arr.shape[0]
    counts = np.zeros(size + 1, dtype=np.int64)
    if size > ell:
        neq = (arr[:-ell] != arr[ell:]).astype(np.int64)
        counts[ell + 1 :] = np.cumsum(neq)
    return np.minimum(ell, np.arange(size + 1)) + counts


def trim_text(
    text_window: SymbolString,
    ell: int,
    k: int,
    budget: int | None = None,
    split: int | None = None,
) -> tuple[SymbolString, int]:
    """Cut the window down to T' = T_L T_R.

    T_L is the longest suffix of ``window[:split]`` and T_R the longest prefix
    of ``window[split:]`` whose runs_ell stays within ``budget`` (6k unless
    given).  ``split`` defaults to half the window.  Returns T' and the offset
    of T_L in the window.
    """
    if ell < 1 or ell > k:
        raise InvalidParameterError(f"trim_text needs 1 <= ell <= k, got ell={ell}, k={k}")
    budget = 6 * k if budget is None else budget
    arr = text_window.symbols
    split = arr.shape[0] // 2 if split is None else split
    if not 0 <= split <= arr.shape[0]:
        raise InvalidParameterError(f"split {split} outside the window")

    left = _suffix_runs(arr[:split], ell)
    start = int(np.argmax(left <= budget))
    right = _prefix_runs(arr[split:], ell)
    stop = split + int(np.count_nonzero(right <= budget)) - 1
    logger.debug(f"trim_text: window {arr.shape[0]} -> [{start}, {stop}) with budget {budget}")
    return text_window.slice(start, stop), start


# ─────────────────────────────────────────────────────────────────────────────
# Rearrangement
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class KernelInstance:
    """Rearranged pair (T*, P*) and the bookkeeping to map results back."""

    t_star: SymbolString
    p_star: SymbolString
    ell: int
    m1: int
    m2: int
    budget_star: int
    t_prime_offset: int
    t_prime_length: int
    pattern_length: int

    @property
    def pattern_padding(self) -> int:
        """Number of '$' appended to P to reach a multiple of ell."""
        return self.m2 * self.ell - self.pattern_length

    @property
    def extra(self) -> int:
        """(m1 - m2) * ell, the constant added to every star distance."""
        return (self.m1 - self.m2) * self.ell

    @property
    def alignment_count(self) -> int:
        """Alignments alpha in [0, (m1 - m2) * ell]."""
        return self.extra + 1

    def run_bound_t_star(self) -> int:
        """2 * runs_ell(padded T') + ell, an upper bound on runs(T*)."""
        classes = self.t_star.symbols[: self.m1 * self.ell].reshape(self.ell, self.m1)
        stride_runs = self.ell + int(np.count_nonzero(classes[:, 1:] != classes[:, :-1]))
        return 2 * stride_runs + self.ell


def rearrange(t_prime: SymbolString, pattern: SymbolString, ell: int, k: int = 0) -> KernelInstance:
    """Build (T*, P*) from T' and P for stride ``ell``."""
    if ell < 1:
        raise InvalidParameterError(f"stride must be >= 1, got {ell}")
    m = len(pattern)
    m1 = -(-len(t_prime) // ell)
    m2 = -(-m // ell)
    if m2 > m1:
        raise InvalidParameterError(
            f"padded pattern ({m2 * ell}) longer than padded text ({m1 * ell}); no alignment exists"
        )

    t_pad = SymbolString.concat([t_prime, SymbolString.filled(TEXT_SENTINEL, m1 * ell - len(t_prime))])
    t_second = SymbolString.concat([t_pad.slice(ell, m1 * ell), SymbolString.filled(TEXT_SENTINEL, ell)])
    p_pad = SymbolString.concat([pattern, SymbolString.filled(PAT_SENTINEL, m1 * ell - m)])

    t_star = SymbolString.concat([ell_encoding(t_pad, ell), ell_encoding(t_second, ell)])
    p_star = ell_encoding(p_pad, ell)
    inst = KernelInstance(
        t_star=t_star,
        p_star=p_star,
        ell=ell,
        m1=m1,
        m2=m2,
        budget_star=k + (m1 - m2) * ell,
        t_prime_offset=0,
        t_prime_length=len(t_prime),
        pattern_length=m,
    )
    logger.debug(f"rearrange: ell={ell}, m1={m1}, m2={m2}, |T*|={len(t_star)}, "
                 f"runs(P*)={runs_count(p_star)}")
    return inst


def map_alignment(inst: KernelInstance, alpha: int) -> int:
    """beta = alpha // ell + (alpha % ell) * m1."""
    if not 0 <= alpha <= inst.extra:
        raise InvalidParameterError(f"alignment {alpha} outside [0, {inst.extra}]")
    return alpha // inst.ell + (alpha % inst.ell) * inst.m1


def map_alignments(inst: KernelInstance) -> np.ndarray:
    """``map_alignment`` for every alpha in [0, (m1 - m2) * ell]."""
    alpha = np.arange(inst.alignment_count, dtype=np.int64)
    return alpha // inst.ell + (alpha % inst.ell) * inst.m1
