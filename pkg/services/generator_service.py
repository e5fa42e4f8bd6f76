from __future__ import annotations

import logging

import numpy as np

from core.errors import InvalidParameterError
from core.lb_reduction import LbInstance, encode
from core.strings import SymbolString


class GeneratorService:
    """Seeded instance generators for matching, verification and benchmarks."""

    def __init__(self, seed: int) -> None:
        self.seed = seed

    def _rng(self, *stream: int) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence([self.seed, *stream]))

    def random_instance(self, n: int, m: int, sigma: int) -> tuple[SymbolString, SymbolString]:
        """Uniform text and pattern over ``sigma`` symbols."""
        if not 1 <= m <= n:
            raise InvalidParameterError(f"need 1 <= m <= n, got n={n}, m={m}")
        if sigma < 1:
            raise InvalidParameterError("alphabet size must be >= 1")
        rng = self._rng(1)
        text = rng.integers(0, sigma, size=n, dtype=np.int64)
        pattern = rng.integers(0, sigma, size=m, dtype=np.int64)
        return SymbolString(text, alphabet_hint=sigma), SymbolString(pattern, alphabet_hint=sigma)

    def _substitute(self, rng: np.random.Generator, arr: np.ndarray, count: int, sigma: int) -> None:
        """Overwrite ``count`` distinct positions with a different symbol."""
        if count <= 0 or sigma < 2:
            return
        where = rng.choice(arr.size, size=min(count, arr.size), replace=False)
        arr[where] = (arr[where] + rng.integers(1, sigma, size=where.size)) % sigma

    def periodic_instance(
        self,
        n: int,
        m: int,
        period: int,
        plant: int,
        sigma: int = 26,
        text_plant: int | None = None,
    ) -> tuple[SymbolString, SymbolString]:
        """Text and pattern built from one random word of length ``period``.

        The pattern gets ``plant`` substitutions; the text gets ``text_plant``
        substitutions per m positions (``plant`` unless given).
        """
        if not 1 <= m <= n:
            raise InvalidParameterError(f"need 1 <= m <= n, got n={n}, m={m}")
        if not 1 <= period <= m:
            raise InvalidParameterError(f"period must lie in [1, m], got {period}")
        if plant < 0 or sigma < 1:
            raise InvalidParameterError("plant must be >= 0 and sigma >= 1")
        rng = self._rng(2)
        word = rng.integers(0, sigma, size=period, dtype=np.int64)
        pattern = np.resize(word, m)
        self._substitute(rng, pattern, plant, sigma)

        phase = int(rng.integers(0, period))
        text = np.resize(np.roll(word, -phase), n)
        per_block = plant if text_plant is None else text_plant
        self._substitute(rng, text, per_block * -(-n // m), sigma)
        logging.debug(f"periodic instance: n={n}, m={m}, period={period}, plant={plant}")
        return SymbolString(text, alphabet_hint=sigma), SymbolString(pattern, alphabet_hint=sigma)

    def random_matrices(self, rows: int, cols: int, inner: int, density: float = 0.5) -> tuple[np.ndarray, np.ndarray]:
        """Boolean A (rows x inner) and B (inner x cols)."""
        if not 0.0 <= density <= 1.0:
            raise InvalidParameterError("density must lie in [0, 1]")
        rng = self._rng(3)
        return rng.random((rows, inner)) < density, rng.random((inner, cols)) < density

    def lb_instance(self, a: np.ndarray, b: np.ndarray) -> LbInstance:
        return encode(a, b)
