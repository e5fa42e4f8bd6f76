"""
Boolean matrix product as a k-mismatch instance.

Rows of A become text blocks of pitch M + 1, columns of B become pattern
blocks of pitch M::

    T = #^(M*M) r_1 #^(M-N+1) r_2 ... r_M' #^(M*M)
    P = c_1 #^(M-N) c_2 ... c_M

Entry ``A[i][l] = 1`` is written as symbol ``l + 1`` at offset ``l`` of row
block ``i`` (likewise for B's columns); zeros use one code on the text side
and another on the pattern side so they never match.  Because the pitches
differ by one, alignment ``M*M + i + (i - j) * M`` lines up row ``i`` with
column ``j`` and no other pair, and every common 1 lowers that alignment's
mismatch count by one below the all-zero baseline.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from core.convolution import count_symbol_matches
from core.errors import InstanceFormatError, InvalidParameterError
from core.oracle import DistanceReport
from core.strings import SymbolString

logger = logging.getLogger(__name__)

PAD = 0


@dataclass(frozen=True, eq=False)
class LbInstance:
    text: SymbolString
    pattern: SymbolString
    rows: int  # M'
    cols: int  # M
    inner: int  # N
    alignment_map: np.ndarray  # (M', M) -> alignment
    baseline: np.ndarray  # (M', M) -> mismatches with all-zero matrices

    @property
    def zero_text(self) -> int:
        return self.inner + 1

    @property
    def zero_pattern(self) -> int:
        return self.inner + 2

    @property
    def mismatch_bound(self) -> int:
        """2 * N * M, the largest mismatch count at any alignment."""
        return 2 * self.inner * self.cols

    def alignment(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise InvalidParameterError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return int(self.alignment_map[i, j])

    def metadata(self) -> dict[str, Any]:
        """Dimensions needed to decode from files."""
        return {"rows": self.rows, "cols": self.cols, "inner": self.inner}

    @classmethod
    def from_metadata(cls, text: SymbolString, pattern: SymbolString, meta: dict[str, Any]) -> LbInstance:
        """Rebuild the decoding tables for stored T and P."""
        try:
            rows, cols, inner = int(meta["rows"]), int(meta["cols"]), int(meta["inner"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InstanceFormatError(f"bad lb metadata: {exc}") from exc
        _check_dims(rows, cols, inner)
        if len(text) != _text_length(rows, cols, inner) or len(pattern) != _pattern_length(cols, inner):
            raise InstanceFormatError("text/pattern lengths do not match the lb metadata")
        return cls(text, pattern, rows, cols, inner, *_tables(text, pattern, rows, cols))


def _check_dims(rows: int, cols: int, inner: int) -> None:
    if not rows >= cols >= inner >= 1:
        raise InvalidParameterError(f"need M' >= M >= N >= 1, got M'={rows}, M={cols}, N={inner}")


def _text_length(rows: int, cols: int, inner: int) -> int:
    return 2 * cols * cols + rows * inner + (rows - 1) * (cols - inner + 1)


def _pattern_length(cols: int, inner: int) -> int:
    return cols * inner + (cols - 1) * (cols - inner)


def _tables(text: SymbolString, pattern: SymbolString, rows: int, cols: int) -> tuple[np.ndarray, np.ndarray]:
    i = np.arange(rows)[:, None]
    j = np.arange(cols)[None, :]
    alignment_map = cols * cols + i + (i - j) * cols
    pad_matches = count_symbol_matches(text, pattern, PAD)
    baseline = len(pattern) - pad_matches[alignment_map]
    return alignment_map, baseline


def encode(a: np.ndarray, b: np.ndarray) -> LbInstance:
    """Encode the pair (A: M'xN, B: NxM)."""
    a = np.asarray(a, dtype=bool)
    b = np.asarray(b, dtype=bool)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise InvalidParameterError(f"incompatible matrices {a.shape} x {b.shape}")
    rows, inner = a.shape
    cols = b.shape[1]
    _check_dims(rows, cols, inner)

    values = np.arange(1, inner + 1, dtype=np.int64)
    text = np.full(_text_length(rows, cols, inner), PAD, dtype=np.int64)
    for i in range(rows):
        start = cols * cols + i * (cols + 1)
        text[start : start + inner] = np.where(a[i], values, inner + 1)

    pattern = np.full(_pattern_length(cols, inner), PAD, dtype=np.int64)
    for j in range(cols):
        start = j * cols
        pattern[start : start + inner] = np.where(b[:, j], values, inner + 2)

    t, p = SymbolString(text, alphabet_hint=inner + 3), SymbolString(pattern, alphabet_hint=inner + 3)
    alignment_map, baseline = _tables(t, p, rows, cols)
    logger.debug(f"lb encode: M'={rows}, M={cols}, N={inner}, |T|={len(t)}, |P|={len(p)}")
    return LbInstance(t, p, rows, cols, inner, alignment_map, baseline)


def decode(inst: LbInstance, distances: np.ndarray | DistanceReport) -> np.ndarray:
    """Boolean M'xM product: 1 where the alignment falls below its all-zero baseline."""
    if isinstance(distances, DistanceReport):
        values = distances.distances
    else:
        values = np.asarray(distances, dtype=np.int64)
    if np.unique(inst.alignment_map).size != inst.alignment_map.size:
        raise InvalidParameterError("two matrix entries share one alignment")
    if int(inst.alignment_map.max()) >= values.shape[0] or int(inst.alignment_map.min()) < 0:
        raise InvalidParameterError("distance array does not cover every encoded alignment")
    picked = values[inst.alignment_map]
    if np.any(picked < 0):
        raise InvalidParameterError(f"exact distances needed; rerun with k >= {inst.mismatch_bound}")
    return picked < inst.baseline
