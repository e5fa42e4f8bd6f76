"""Exact integer correlation by number-theoretic transform modulo 998244353."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from core.errors import InvalidParameterError

MOD = 998_244_353
ROOT = 3
# MOD - 1 = 119 * 2^23
MAX_SIZE = 1 << 23


def _geometric(w: int, count: int) -> np.ndarray:
    out = np.empty(max(count, 1), dtype=np.int64)
    out[0] = 1
    filled = 1
    while filled < count:
        take = min(filled, count - filled)
        out[filled : filled + take] = out[:take] * pow(w, filled, MOD) % MOD
        filled += take
    return out[:count]


@lru_cache(maxsize=32)
def _bit_reversal(size: int) -> np.ndarray:
    bits = size.bit_length() - 1
    idx = np.arange(size, dtype=np.int64)
    rev = np.zeros(size, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def transform(values: np.ndarray, *, invert: bool = False) -> np.ndarray:
    """In-order NTT of a power-of-two length vector of residues."""
    size = values.shape[0]
    if size & (size - 1) or size > MAX_SIZE:
        raise InvalidParameterError(f"NTT size must be a power of two <= {MAX_SIZE}, got {size}")
    a = np.asarray(values, dtype=np.int64)[_bit_reversal(size)] % MOD
    length = 2
    while length <= size:
        w = pow(ROOT, (MOD - 1) // length, MOD)
        if invert:
            w = pow(w, MOD - 2, MOD)
        half = length >> 1
        blocks = a.reshape(-1, length)
        u = blocks[:, :half]
        v = blocks[:, half:] * _geometric(w, half) % MOD
        a = np.concatenate(((u + v) % MOD, (u - v) % MOD), axis=1).reshape(-1)
        length <<= 1
    if invert:
        a = a * pow(size, MOD - 2, MOD) % MOD
    return a


def convolve(a: np.ndarray, b: np.ndarray, size: int) -> np.ndarray:
    """Linear convolution of two integer vectors, signed, exact while |out| < MOD/2."""
    fa = np.zeros(size, dtype=np.int64)
    fb = np.zeros(size, dtype=np.int64)
    fa[: a.shape[0]] = np.asarray(a, dtype=np.int64) % MOD
    fb[: b.shape[0]] = np.asarray(b, dtype=np.int64) % MOD
    out = transform(transform(fa) * transform(fb) % MOD, invert=True)
    return np.where(out > MOD // 2, out - MOD, out)


def correlate(text_values: np.ndarray, pattern_values: np.ndarray, size: int) -> np.ndarray:
    """out[i] = sum_j text[i+j] * pattern[j] for i in [0, n-m]."""
    n, m = text_values.shape[0], pattern_values.shape[0]
    return convolve(np.asarray(text_values), np.asarray(pattern_values)[::-1], size)[m - 1 : n]
