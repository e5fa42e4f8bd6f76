"""Tests for core/lce.py - LCE queries, kangaroo verification and Landau-Vishkin."""
from __future__ import annotations

from unittest import mock

import numpy as np
import pytest

from core.errors import InvalidParameterError
from core.lce import LceIndex, build_lce, landau_vishkin, verify_alignment, verify_many
from core.oracle import EXCEEDS, brute_distances
from core.strings import SymbolString


def s(text: str) -> SymbolString:
    return SymbolString.from_text(text, sentinels=True)


def naive_lce(pattern: SymbolString, text: SymbolString, p: int, t: int) -> int:
    length = 0
    while p + length < len(pattern) and t + length < len(text) and pattern[p + length] == text[t + length]:
        length += 1
    return length


class TestLceQueries:
    """Single and batched LCE queries."""

    def test_basic(self) -> None:
        idx = build_lce(s("abcab"), s("xabcabz"))
        assert idx.lce(0, 1) == 5
        assert idx.lce(0, 0) == 0
        assert idx.lce(3, 4) == 2
        assert idx.lce(5, 0) == 0

    def test_out_of_range(self) -> None:
        idx = build_lce(s("ab"), s("abc"))
        with pytest.raises(InvalidParameterError):
            idx.lce(3, 0)
        with pytest.raises(InvalidParameterError):
            idx.lce(0, -1)

    @pytest.mark.parametrize("seed", range(4))
    def test_random_against_naive(self, seed: int) -> None:
        rng = np.random.default_rng(seed)
        pattern = SymbolString(rng.integers(0, 2, size=40))
        text = SymbolString(rng.integers(0, 2, size=90))
        idx = LceIndex(pattern, text, seed=seed)
        p_pos = rng.integers(0, 41, size=200)
        t_pos = rng.integers(0, 91, size=200)
        expected = [naive_lce(pattern, text, int(p), int(t)) for p, t in zip(p_pos, t_pos)]
        assert [idx.lce(int(p), int(t)) for p, t in zip(p_pos, t_pos)] == expected
        assert idx.lce_many(p_pos, t_pos).tolist() == expected

    def test_large_codes(self) -> None:
        big = 2**31 - 17
        pattern = SymbolString.from_tokens([big, 0, big])
        text = SymbolString.from_tokens([0, big, 0, big, 5])
        assert build_lce(pattern, text).lce(0, 1) == 3


class TestVerification:
    """Kangaroo counting with a cap."""

    def test_verify_alignment(self) -> None:
        idx = build_lce(s("abcd"), s("abxdabcd"))
        assert verify_alignment(idx, 0, 1) == 1
        assert verify_alignment(idx, 0, 0) is None
        assert verify_alignment(idx, 4, 0) == 0

    def test_verify_alignment_range(self) -> None:
        idx = build_lce(s("abcd"), s("abxdabcd"))
        with pytest.raises(InvalidParameterError):
            verify_alignment(idx, 5, 1)
        with pytest.raises(InvalidParameterError):
            verify_many(idx, np.array([0, 5]), 1)

    def test_query_count_bounded_by_cap(self) -> None:
        rng = np.random.default_rng(3)
        pattern = SymbolString(rng.integers(0, 5, size=200))
        text = SymbolString(rng.integers(0, 5, size=400))
        idx = build_lce(pattern, text)
        original = LceIndex.lce
        for cap in (0, 1, 4, 10):
            with mock.patch.object(LceIndex, "lce", autospec=True, side_effect=original) as spy:
                verify_alignment(idx, 17, cap)
            assert spy.call_count <= cap + 2

    def test_verify_many_matches_scalar(self) -> None:
        rng = np.random.default_rng(11)
        pattern = SymbolString(rng.integers(0, 3, size=30))
        text = SymbolString(rng.integers(0, 3, size=120))
        idx = build_lce(pattern, text)
        alignments = np.arange(len(text) - len(pattern) + 1)
        batch = verify_many(idx, alignments, 12)
        for i in alignments.tolist():
            scalar = verify_alignment(idx, i, 12)
            assert batch[i] == (EXCEEDS if scalar is None else scalar)


class TestLandauVishkin:
    """landau_vishkin() agrees with the brute oracle."""

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_brute(self, seed: int) -> None:
        rng = np.random.default_rng(seed)
        m = int(rng.integers(1, 40))
        pattern = SymbolString(rng.integers(0, 3, size=m))
        text = SymbolString(rng.integers(0, 3, size=m + int(rng.integers(0, 100))))
        k = int(rng.integers(0, m + 1))
        assert landau_vishkin(text, pattern, k, seed=seed) == brute_distances(text, pattern, k)

    def test_periodic_text(self) -> None:
        text = s("ab" * 50)
        pattern = s("ab" * 8)
        report = landau_vishkin(text, pattern, 2)
        assert report.distances[0::2].tolist() == [0] * 43
        assert set(report.distances[1::2].tolist()) == {EXCEEDS}

    def test_rejects_long_pattern(self) -> None:
        with pytest.raises(InvalidParameterError):
            landau_vishkin(s("ab"), s("abc"), 1)
