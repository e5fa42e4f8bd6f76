"""
Longest-common-extension queries and kangaroo-jump verification.

``LceIndex`` fingerprints the concatenation ``pattern + text`` with two
independent polynomial hashes (moduli 2^31-1 and 2^31-19, random bases drawn
from the seed) and answers ``lce(p, t)`` by galloping + binary search over
fingerprint comparisons.  Symbols are rank-compressed first so that distinct
codes stay distinct modulo either prime.  Every intermediate product fits in
int64, which keeps the batch queries fully vectorized.
"""

from __future__ import annotations

import logging

import numpy as np

from core.errors import InvalidParameterError
from core.oracle import EXCEEDS, DistanceReport
from core.strings import SymbolString

logger = logging.getLogger(__name__)

_MODULI = (2_147_483_647, 2_147_483_629)


def _powers(base: int, length: int, mod: int) -> np.ndarray:
    """base^0 .. base^(length-1) mod ``mod`` by block doubling."""
    pw = np.empty(max(length, 1), dtype=np.int64)
    pw[0] = 1
    filled = 1
    while filled < length:
        take = min(filled, length - filled)
        pw[filled : filled + take] = pw[:take] * pow(base, filled, mod) % mod
        filled += take
    return pw


class LceIndex:
    """Fingerprint index over ``pattern + text``.

    Immutable after construction; all queries are pure.
    """

    def __init__(self, pattern: SymbolString, text: SymbolString, seed: int = 0) -> None:
        self.m = len(pattern)
        self.n = len(text)
        joined = np.concatenate((pattern.symbols, text.symbols))
        _, inverse = np.unique(joined, return_inverse=True)
        self._ranks = (inverse.astype(np.int64) + 1).reshape(-1)
        total = self._ranks.shape[0]

        rng = np.random.default_rng(np.random.SeedSequence([seed, 0x1CE]))
        self._tables: list[tuple[np.ndarray, np.ndarray, int]] = []
        for mod in _MODULI:
            base = int(rng.integers(1 << 16, mod - 1))
            pw = _powers(base, total + 1, mod)
            terms = self._ranks * pw[:total] % mod
            prefix = np.zeros(total + 1, dtype=np.int64)
            np.cumsum(terms, out=prefix[1:])
            prefix %= mod
            self._tables.append((prefix, pw, mod))
        logger.debug(f"LceIndex built over m={self.m}, n={self.n}")

    # ── fingerprint comparison ───────────────────────────────────────────

    def _equal(self, a, b, length):  # type: ignore[no-untyped-def]
        """Whether joined[a:a+length] == joined[b:b+length]; scalar or array arguments."""
        result = True
        for prefix, pw, mod in self._tables:
            ha = (prefix[a + length] - prefix[a]) % mod
            hb = (prefix[b + length] - prefix[b]) % mod
            same = (ha * pw[b] % mod) == (hb * pw[a] % mod)
            result = result & same
        return result

    # ── single queries ───────────────────────────────────────────────────

    def lce(self, p_pos: int, t_pos: int) -> int:
        """Length of the longest common prefix of pattern[p_pos:] and text[t_pos:]."""
        if not (0 <= p_pos <= self.m and 0 <= t_pos <= self.n):
            raise InvalidParameterError(f"lce({p_pos}, {t_pos}) outside the indexed strings")
        limit = min(self.m - p_pos, self.n - t_pos)
        a, b = p_pos, self.m + t_pos
        if limit <= 0 or self._ranks[a] != self._ranks[b]:
            return 0
        lo, step = 1, 1
        while True:
            cand = min(lo + step, limit)
            if cand == lo:
                return lo
            if self._equal(a, b, cand):
                lo = cand
                if lo == limit:
                    return lo
                step <<= 1
            else:
                hi = cand
                break
        while hi - lo > 1:
            mid = (lo + hi) >> 1
            if self._equal(a, b, mid):
                lo = mid
            else:
                hi = mid
        return lo

    def mismatches(self, p_start: int, t_start: int, length: int, cap: int) -> int | None:
        """Kangaroo-jump count of mismatches over ``length`` positions, None past ``cap``."""
        count = 0
        off = 0
        while off < length:
            off += self.lce(p_start + off, t_start + off)
            if off >= length:
                break
            count += 1
            if count > cap:
                return None
            off += 1
        return count

    # ── batch queries ────────────────────────────────────────────────────

    def lce_many(self, p_pos: np.ndarray, t_pos: np.ndarray) -> np.ndarray:
        """Vectorized ``lce`` by lock-step binary search."""
        p_pos = np.asarray(p_pos, dtype=np.int64)
        t_pos = np.asarray(t_pos, dtype=np.int64)
        a = p_pos
        b = t_pos + self.m
        limit = np.minimum(self.m - p_pos, self.n - t_pos)
        lo = np.zeros_like(limit)
        hi = limit + 1  # smallest length known to differ (exclusive)
        active = np.flatnonzero(hi - lo > 1)
        while active.size:
            mid = (lo[active] + hi[active]) >> 1
            eq = self._equal(a[active], b[active], mid)
            lo[active] = np.where(eq, mid, lo[active])
            hi[active] = np.where(eq, hi[active], mid)
            active = active[hi[active] - lo[active] > 1]
        return lo

    def mismatches_many(
        self,
        t_starts: np.ndarray,
        cap: int,
        *,
        p_start: int = 0,
        length: int | None = None,
    ) -> np.ndarray:
        """Kangaroo counts for many text starts at once; EXCEEDS beyond ``cap``."""
        length = self.m - p_start if length is None else length
        t_starts = np.asarray(t_starts, dtype=np.int64)
        off = np.zeros_like(t_starts)
        count = np.zeros_like(t_starts)
        result = np.full_like(t_starts, EXCEEDS)
        active = np.arange(t_starts.shape[0])
        while active.size:
            jump = self.lce_many(p_start + off[active], t_starts[active] + off[active])
            off[active] += jump
            finished = off[active] >= length
            done = active[finished]
            result[done] = count[done]
            active = active[~finished]
            count[active] += 1
            off[active] += 1
            active = active[count[active] <= cap]
        return result


def build_lce(pattern: SymbolString, text: SymbolString, seed: int = 0) -> LceIndex:
    return LceIndex(pattern, text, seed)


def verify_alignment(idx: LceIndex, i: int, cap: int) -> int | None:
    """Exact distance of pattern vs text[i:i+m] if at most ``cap``, else None."""
    if not 0 <= i <= idx.n - idx.m:
        raise InvalidParameterError(f"alignment {i} outside [0, {idx.n - idx.m}]")
    return idx.mismatches(0, i, idx.m, cap)


def verify_many(idx: LceIndex, alignments: np.ndarray, cap: int) -> np.ndarray:
    """``verify_alignment`` for a batch; EXCEEDS where the distance is above ``cap``."""
    alignments = np.asarray(alignments, dtype=np.int64)
    if alignments.size and (alignments.min() < 0 or alignments.max() > idx.n - idx.m):
        raise InvalidParameterError(f"alignments must lie in [0, {idx.n - idx.m}]")
    return idx.mismatches_many(alignments, cap)


def landau_vishkin(text: SymbolString, pattern: SymbolString, k: int, seed: int = 0) -> DistanceReport:
    """O(nk) kangaroo matcher over every alignment, batched across alignments."""
    n, m = len(text), len(pattern)
    if m == 0:
        raise InvalidParameterError("pattern must not be empty")
    if m > n:
        raise InvalidParameterError(f"pattern longer than text ({m} > {n})")
    if k < 0:
        raise InvalidParameterError("k must be non-negative")
    idx = LceIndex(pattern, text, seed)
    return DistanceReport(verify_many(idx, np.arange(n - m + 1), k), k)
