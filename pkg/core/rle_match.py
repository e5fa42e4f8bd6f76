"""
Exact matching of the kernelized pair (T*, P*).

A letter with more than ``t`` runs in P* is heavy and counted by correlation.
Every other letter is light: each text run of a light letter is paired with
each of the letter's (at most ``t``) pattern runs.  A pair of runs [u, v] and
[y, z] contributes a trapezoid of matches over offsets [u - z, v - y] whose
second derivative has just four non-zero entries, so run pairs are
accumulated as second derivatives and the match counts are recovered with
two prefix sums at the end.
"""

from __future__ import annotations

import logging

import numpy as np

from core.convolution import SymbolCorrelator, default_threshold, make_plan
from core.errors import InvalidParameterError
from core.kernel import KernelInstance, map_alignments
from core.oracle import DistanceReport
from core.strings import RleView, is_sentinel, rle_view

logger = logging.getLogger(__name__)

# Floor on run pairs expanded per apply_many call.
_CHUNK_PAIRS = 1 << 21


class DerivativeAccumulator:
    """Second derivative of the light-match histogram.

    Offsets span [-|P*| - 2, |T*| + 2]; the recovered window is
    [0, |T*| - |P*|].
    """

    def __init__(self, text_length: int, pattern_length: int) -> None:
        self.text_length = text_length
        self.pattern_length = pattern_length
        self.low = -pattern_length - 2
        self.high = text_length + 2
        self.d2 = np.zeros(self.high - self.low + 1, dtype=np.int64)
        self.pairs_applied = 0

    def offsets(self) -> np.ndarray:
        return np.arange(self.low, self.high + 1)

    def at(self, offset: int) -> int:
        return int(self.d2[offset - self.low])

    def total(self) -> int:
        return int(self.d2.sum())

    def apply_many(self, u: np.ndarray, v: np.ndarray, y: np.ndarray, z: np.ndarray) -> None:
        """Vectorized run-pair updates: +1@u-z, -1@v-z+1, -1@u-y+1, +1@v-y+2."""
        size = self.d2.shape[0]
        shift = -self.low
        u, v, y, z = (np.asarray(a, dtype=np.int64) for a in (u, v, y, z))
        plus = np.concatenate((u - z, v - y + 2)) + shift
        minus = np.concatenate((v - z + 1, u - y + 1)) + shift
        self.d2 += np.bincount(plus, minlength=size)
        self.d2 -= np.bincount(minus, minlength=size)
        self.pairs_applied += int(u.size)


def apply_run_pair(
    acc: DerivativeAccumulator,
    text_run: tuple[int, int],
    pattern_run: tuple[int, int],
) -> None:
    """Add the trapezoid of one same-letter run pair, given as inclusive [start, end]."""
    u, v = text_run
    y, z = pattern_run
    if not (0 <= u <= v < acc.text_length and 0 <= y <= z < acc.pattern_length):
        raise InvalidParameterError(f"run pair {text_run} / {pattern_run} outside the strings")
    shift = -acc.low
    acc.d2[u - z + shift] += 1
    acc.d2[v - z + 1 + shift] -= 1
    acc.d2[u - y + 1 + shift] -= 1
    acc.d2[v - y + 2 + shift] += 1
    acc.pairs_applied += 1


def recover_counts(acc: DerivativeAccumulator) -> np.ndarray:
    """Light-match counts at offsets 0 .. |T*| - |P*| by a double prefix sum."""
    histogram = np.cumsum(np.cumsum(acc.d2))
    start = -acc.low
    return histogram[start : start + acc.text_length - acc.pattern_length + 1]


def recover_by_recurrence(d2: np.ndarray, a0: int, a1: int) -> np.ndarray:
    """A[i] = d2[i] + 2 A[i-1] - A[i-2] seeded with A[0] = a0, A[1] = a1."""
    d2 = np.asarray(d2, dtype=np.int64)
    size = d2.shape[0]
    steps = np.zeros(size, dtype=np.int64)
    steps[2:] = d2[2:]
    i = np.arange(size, dtype=np.int64)
    return a0 + (a1 - a0) * i + np.cumsum(np.cumsum(steps))


def classify_letters(p_star: RleView, t: int) -> tuple[frozenset[int], frozenset[int]]:
    """Split the non-sentinel letters of P* into (heavy, light) by run count."""
    if t < 1:
        raise InvalidParameterError("threshold must be >= 1")
    heavy, light = set(), set()
    for c, idx in p_star.indices_by_symbol.items():
        if is_sentinel(c):
            continue
        (heavy if idx.size > t else light).add(c)
    return frozenset(heavy), frozenset(light)


def accumulate_light(
    acc: DerivativeAccumulator,
    t_rle: RleView,
    p_rle: RleView,
    light: frozenset[int],
    chunk_pairs: int | None = None,
) -> None:
    """Pair every light text run with every pattern run of its letter.

    Pairs are expanded for consecutive blocks of text runs holding about
    ``chunk_pairs`` pairs each (``max(|T*|, 2^21)`` by default) and applied
    with one ``apply_many`` per block.
    """
    if not light or len(t_rle) == 0:
        return
    p_index = p_rle.indices_by_symbol
    letters = np.array(sorted(light), dtype=np.int64)
    # per-letter sorted pattern run lists, flattened
    lists = [p_index[int(c)] for c in letters]
    sizes = np.array([a.size for a in lists], dtype=np.int64)
    starts = np.concatenate(([0], np.cumsum(sizes)[:-1]))
    flat = np.concatenate(lists)

    slot = np.searchsorted(letters, t_rle.symbols)
    slot = np.minimum(slot, letters.size - 1)
    runs = np.flatnonzero(letters[slot] == t_rle.symbols)
    if runs.size == 0:
        return
    group_start = starts[slot[runs]]
    group_size = sizes[slot[runs]]
    u_all = t_rle.starts[runs]
    v_all = t_rle.ends[runs]
    p_starts, p_ends = p_rle.starts, p_rle.ends

    chunk = max(acc.d2.shape[0], _CHUNK_PAIRS) if chunk_pairs is None else chunk_pairs
    if chunk < 1:
        raise InvalidParameterError("chunk_pairs must be >= 1")
    cumulative = np.cumsum(group_size)
    total = int(cumulative[-1])
    # block boundaries over text runs; a single run never splits
    cuts = np.searchsorted(cumulative, np.arange(chunk, total, chunk), side="left") + 1
    bounds = np.unique(np.concatenate(([0], cuts, [runs.size])))
    for lo, hi in zip(bounds[:-1].tolist(), bounds[1:].tolist()):
        sizes_here = group_size[lo:hi]
        count = int(sizes_here.sum())
        if count == 0:
            continue
        owner = np.repeat(np.arange(hi - lo), sizes_here)
        first = np.cumsum(sizes_here) - sizes_here
        within = np.arange(count, dtype=np.int64) - first[owner]
        pattern_runs = flat[group_start[lo:hi][owner] + within]
        acc.apply_many(u_all[lo:hi][owner], v_all[lo:hi][owner], p_starts[pattern_runs], p_ends[pattern_runs])


def star_distances(
    inst: KernelInstance,
    t: int | None = None,
    backend: str | None = None,
) -> np.ndarray:
    """Exact distance of P* against T* at every offset 0 .. |T*| - |P*|."""
    t = default_threshold(inst.pattern_length) if t is None else t
    text, pattern = inst.t_star, inst.p_star
    t_rle, p_rle = rle_view(text), rle_view(pattern)
    heavy, light = classify_letters(p_rle, t)

    plan = make_plan(len(text), len(pattern), backend)  # type: ignore[arg-type]
    heavy_matches = SymbolCorrelator(text, pattern, plan).matches(sorted(heavy))

    acc = DerivativeAccumulator(len(text), len(pattern))
    accumulate_light(acc, t_rle, p_rle, light)
    light_matches = recover_counts(acc)
    logger.debug(f"star_distances: t={t}, heavy={len(heavy)}, light={len(light)}, "
                 f"run pairs={acc.pairs_applied}")
    return len(pattern) - heavy_matches - light_matches


def kernel_distances(
    inst: KernelInstance,
    k: int,
    t: int | None = None,
    backend: str | None = None,
) -> DistanceReport:
    """Report over T' alignments 0 .. (m1 - m2) * ell of the unpadded pattern."""
    star = star_distances(inst, t, backend)
    exact = star[map_alignments(inst)] - inst.extra - inst.pattern_padding
    return DistanceReport.from_exact(exact, k)
