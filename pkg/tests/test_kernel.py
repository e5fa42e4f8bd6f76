"""Tests for core/kernel.py - period detection, trimming and rearrangement."""
from __future__ import annotations

import numpy as np
import pytest

from core.errors import InvalidParameterError
from core.kernel import (
    NoSmallPeriod,
    SmallPeriod,
    detect_period,
    map_alignment,
    map_alignments,
    minimal_x_period,
    occurrence_spacing_ok,
    rearrange,
    trim_text,
)
from core.lce import LceIndex
from core.oracle import brute_distances, window_distance
from core.strings import TEXT_SENTINEL, SymbolString, runs_count, runs_ell, x_period_distance
from services.generator_service import GeneratorService


def s(text: str) -> SymbolString:
    return SymbolString.from_text(text, sentinels=True)


def substitute(base: str, positions: list[int], letter: str = "z") -> str:
    chars = list(base)
    for p in positions:
        chars[p] = letter
    return "".join(chars)


def padded(t_prime: SymbolString, length: int) -> SymbolString:
    return SymbolString.concat([t_prime, SymbolString.filled(TEXT_SENTINEL, length - len(t_prime))])


class TestRearrange:
    """Shape of (T*, P*) and the alignment mapping."""

    def test_worked_example(self) -> None:
        inst = rearrange(s("hokuspokusopensezame"), s("abracadabra"), 4)
        assert inst.t_star == s("hsuezopsnakoosmukpeesuez#psna#oosm#kpee#")
        assert inst.p_star == s("acb$$bar$$rda$$aa$$$")
        assert (inst.m1, inst.m2) == (5, 3)
        assert inst.extra == 8
        assert inst.pattern_padding == 1
        assert map_alignment(inst, 7) == 16

    def test_worked_example_distances(self) -> None:
        t_prime, pattern = s("hokuspokusopensezame"), s("abracadabra")
        inst = rearrange(t_prime, pattern, 4)
        for alpha in range(inst.alignment_count):
            beta = map_alignment(inst, alpha)
            star = window_distance(inst.t_star, inst.p_star, beta)
            assert star == window_distance(t_prime, pattern, alpha) + inst.extra + inst.pattern_padding

    def test_stride_one(self) -> None:
        inst = rearrange(s("abc"), s("ab"), 1)
        assert inst.t_star == s("abcbc#")
        assert inst.p_star == s("ab$")
        assert map_alignments(inst).tolist() == [0, 1]

    def test_unary_text(self) -> None:
        inst = rearrange(s("aaaa"), s("aa"), 2)
        assert inst.t_star.render() == "aaaaa#a#"

    @pytest.mark.parametrize(
        "seed", [*range(12), *(pytest.param(seed, marks=pytest.mark.slow) for seed in range(12, 100))]
    )
    def test_star_distance_offsets_random(self, seed: int) -> None:
        rng = np.random.default_rng(seed)
        length = int(rng.integers(5, 60))
        m = int(rng.integers(1, length + 1))
        ell = int(rng.integers(1, 7))
        t_prime = SymbolString(rng.integers(0, 3, size=length))
        pattern = SymbolString(rng.integers(0, 3, size=m))
        inst = rearrange(t_prime, pattern, ell)
        t_pad = padded(t_prime, inst.m1 * ell)
        betas = map_alignments(inst)
        for alpha in range(inst.alignment_count):
            star = window_distance(inst.t_star, inst.p_star, int(betas[alpha]))
            expected = window_distance(t_pad, pattern, alpha) + inst.extra + inst.pattern_padding
            assert star == expected

    def test_runs_of_t_star_bounded(self) -> None:
        rng = np.random.default_rng(1)
        t_prime = SymbolString(rng.integers(0, 2, size=50))
        inst = rearrange(t_prime, SymbolString(rng.integers(0, 2, size=20)), 3)
        assert runs_count(inst.t_star) <= inst.run_bound_t_star()

    def test_pattern_longer_than_text(self) -> None:
        with pytest.raises(InvalidParameterError):
            rearrange(s("ab"), s("abc"), 1)

    def test_alignment_out_of_range(self) -> None:
        inst = rearrange(s("abcd"), s("ab"), 1)
        with pytest.raises(InvalidParameterError):
            map_alignment(inst, 3)


class TestDetectPeriod:
    """Branch selection for a pattern."""

    def test_unary_pattern(self) -> None:
        assert detect_period(s("a" * 500), 5, 32, seed=0) == SmallPeriod(1, 0)

    def test_random_pattern(self) -> None:
        rng = np.random.default_rng(0)
        pattern = SymbolString(rng.integers(0, 26, size=512))
        assert detect_period(pattern, 8, 32, seed=1) == NoSmallPeriod()

    def test_period_two_with_noise(self) -> None:
        pattern = s(substitute("ab" * 256, [17, 200, 411], "c"))
        verdict = detect_period(pattern, 4, 64, seed=2)
        assert isinstance(verdict, SmallPeriod)
        assert verdict.ell == 2
        assert verdict.distance == x_period_distance(pattern, 2, 16)

    def test_zero_k(self) -> None:
        assert detect_period(s("aaaa"), 0, 8, seed=0) == NoSmallPeriod()

    def test_rejects_foreign_lce(self) -> None:
        pattern = s("abab")
        with pytest.raises(InvalidParameterError):
            detect_period(pattern, 1, 8, seed=0, lce=LceIndex(pattern, s("ababab")))

    def test_rejects_k_at_least_m(self) -> None:
        with pytest.raises(InvalidParameterError):
            detect_period(s("ab"), 2, 8, seed=0)


class TestPeriodHelpers:
    def test_minimal_x_period(self) -> None:
        pattern = s("abc" * 10)
        assert minimal_x_period(pattern, 4, 10) == 3
        assert minimal_x_period(pattern, 4, 2) is None

    def test_occurrence_spacing(self) -> None:
        text, pattern = s("abc" * 30), s("abc" * 10)
        report = brute_distances(text, pattern, 2)
        assert occurrence_spacing_ok(report.reported_positions, 3)
        assert not occurrence_spacing_ok(np.array([0, 2]), 3)


class TestTrimText:
    """trim_text() keeps the longest low-run pieces around the split."""

    def test_pieces_are_maximal(self) -> None:
        rng = np.random.default_rng(4)
        window = SymbolString(rng.integers(0, 3, size=80))
        ell, k, budget, split = 2, 3, 12, 40
        t_prime, offset = trim_text(window, ell, k, budget=budget, split=split)
        stop = offset + len(t_prime)
        assert offset <= split <= stop
        assert runs_ell(window.slice(offset, split), ell) <= budget
        assert runs_ell(window.slice(split, stop), ell) <= budget
        if offset > 0:
            assert runs_ell(window.slice(offset - 1, split), ell) > budget
        if stop < len(window):
            assert runs_ell(window.slice(split, stop + 1), ell) > budget

    def test_periodic_window_untouched(self) -> None:
        window = s("ab" * 40)
        t_prime, offset = trim_text(window, 2, 2)
        assert offset == 0
        assert t_prime == window

    def test_default_budget(self) -> None:
        window = s("abcdefghij" * 8)
        t_prime, offset = trim_text(window, 1, 2)
        assert runs_ell(window.slice(offset, 40), 1) == 12
        assert len(t_prime) == 24

    def test_contains_every_k_occurrence(self) -> None:
        m, k, ell = 60, 3, 3
        pattern = s(substitute("abc" * 20, [10, 31]))
        window = s(substitute("abc" * 40, [5, 70, 100, 115], "y"))
        d = x_period_distance(pattern, ell, 4 * k)
        assert d is not None
        t_prime, offset = trim_text(window, ell, k, budget=ell + d + 2 * k, split=m)
        report = brute_distances(window, pattern, k)
        assert report.reported_positions.size > 0
        for i in report.reported_positions.tolist():
            assert offset <= i and i + m <= offset + len(t_prime)

    def test_rejects_stride_above_k(self) -> None:
        with pytest.raises(InvalidParameterError):
            trim_text(s("abab"), 3, 2)


class TestPeriodicPatternRuns:
    """Patterns with a verified 4k-period ell <= k compress to few runs."""

    @staticmethod
    def generated(seed: int) -> tuple[SymbolString, SymbolString, int]:
        rng = np.random.default_rng(seed)
        m = int(rng.integers(64, 1025))
        k = int(rng.integers(2, 33))
        period = int(rng.integers(1, k + 1))
        sigma = int(rng.choice([2, 4, 26]))
        text, pattern = GeneratorService(seed).periodic_instance(
            2 * m, m, period, plant=int(rng.integers(0, 2 * k + 1)), sigma=sigma
        )
        return text, pattern, k

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(100))
    def test_runs_ell_within_five_k(self, seed: int) -> None:
        text, pattern, k = self.generated(seed)
        ell = minimal_x_period(pattern, 4 * k, k)
        assert ell is not None
        assert runs_ell(pattern, ell) <= 5 * k
        verdict = detect_period(pattern, k, 64, seed=seed)
        if isinstance(verdict, SmallPeriod):
            assert verdict.ell <= k
            assert verdict.distance <= 4 * k
            assert runs_ell(pattern, verdict.ell) <= 5 * k
            inst = rearrange(text, pattern, verdict.ell, k)
            assert runs_count(inst.p_star) <= 6 * k

    @pytest.mark.parametrize("seed", range(5))
    def test_p_star_runs_within_six_k(self, seed: int) -> None:
        text, pattern, k = self.generated(seed)
        ell = minimal_x_period(pattern, 4 * k, k)
        assert ell is not None
        inst = rearrange(text, pattern, ell, k)
        assert runs_count(inst.p_star) <= 6 * k
