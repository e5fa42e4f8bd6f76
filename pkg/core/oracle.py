"""
Brute-force references and the per-alignment report type.

The oracles below only depend on ``SymbolString``; they never call into the
optimized matchers so that agreement between the two is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from core.errors import InvalidParameterError, LengthMismatchError
from core.strings import SymbolString

# Marker stored in DistanceReport.distances for "exceeds k".
EXCEEDS = -1


@dataclass(frozen=True, eq=False)
class DistanceReport:
    """Per-alignment result for alignments 0 .. n-m.

    ``distances[i]`` is the exact Hamming distance when it is at most ``k``
    and ``EXCEEDS`` otherwise.
    """

    distances: np.ndarray
    k: int

    def __post_init__(self) -> None:
        arr = np.asarray(self.distances, dtype=np.int64)
        if arr.size and (arr.min() < EXCEEDS or arr.max() > self.k):
            raise InvalidParameterError("report entries must be EXCEEDS or within [0, k]")
        if arr.flags.writeable:
            arr = arr.copy()
            arr.setflags(write=False)
        object.__setattr__(self, "distances", arr)

    @classmethod
    def from_exact(cls, exact: np.ndarray, k: int) -> DistanceReport:
        """Cap exact (uncapped) distances at ``k``."""
        exact = np.asarray(exact, dtype=np.int64)
        return cls(np.where(exact <= k, exact, EXCEEDS), k)

    @classmethod
    def all_exceeding(cls, count: int, k: int) -> DistanceReport:
        return cls(np.full(count, EXCEEDS, dtype=np.int64), k)

    def __len__(self) -> int:
        return int(self.distances.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceReport):
            return NotImplemented
        return self.k == other.k and bool(np.array_equal(self.distances, other.distances))

    def __hash__(self) -> int:
        return hash((self.k, self.distances.tobytes()))

    def entry(self, i: int) -> int | None:
        """Exact distance at alignment ``i`` or None when it exceeds k."""
        value = int(self.distances[i])
        return None if value == EXCEEDS else value

    def exceeds(self, i: int) -> bool:
        return int(self.distances[i]) == EXCEEDS

    @property
    def reported_positions(self) -> np.ndarray:
        """Alignments with an exact distance."""
        return np.flatnonzero(self.distances != EXCEEDS)

    def lines(self) -> Iterator[str]:
        """``<position> <distance>`` or ``<position> -`` per alignment."""
        for i, d in enumerate(self.distances.tolist()):
            yield f"{i} -" if d == EXCEEDS else f"{i} {d}"


def brute_distances(text: SymbolString, pattern: SymbolString, k: int) -> DistanceReport:
    """O(nm) reference: compare every window position by position."""
    n, m = len(text), len(pattern)
    if m == 0:
        raise InvalidParameterError("pattern must not be empty")
    if m > n:
        raise InvalidParameterError(f"pattern longer than text ({m} > {n})")
    if k < 0:
        raise InvalidParameterError("k must be non-negative")
    count = n - m + 1
    t, p = text.symbols, pattern.symbols
    mismatches = np.zeros(count, dtype=np.int64)
    for j in range(m):
        mismatches += t[j : j + count] != p[j]
    return DistanceReport.from_exact(mismatches, k)


def window_distance(text: SymbolString, pattern: SymbolString, i: int) -> int:
    """Exact distance of one alignment, used by tests as a second opinion."""
    m = len(pattern)
    window = text.symbols[i : i + m]
    if window.shape[0] != m:
        raise LengthMismatchError(f"alignment {i} runs past the text end")
    return int(np.count_nonzero(window != pattern.symbols))


def bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean product (OR of ANDs) of an M'xN and an NxM matrix."""
    a = np.asarray(a, dtype=bool)
    b = np.asarray(b, dtype=bool)
    if a.ndim != 2 or b.ndim != 2:
        raise InvalidParameterError("bool_matmul expects two matrices")
    if a.shape[1] != b.shape[0]:
        raise InvalidParameterError(f"inner dimensions differ: {a.shape} x {b.shape}")
    return np.logical_and(a[:, :, None], b[None, :, :]).any(axis=1)
