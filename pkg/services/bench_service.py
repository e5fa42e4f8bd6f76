from __future__ import annotations

import csv
import logging
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, Sequence

import numpy as np

from config import (
    BENCH_ALGORITHMS,
    BENCH_ALPHAS,
    BENCH_COLUMNS,
    BENCH_LV_MAX_WORK,
    BENCH_SIZES,
    MAX_WORKER_THREADS,
    BenchRow,
    create_bench_row,
)
from core.errors import InvalidParameterError
from core.pipeline import ALGORITHMS, MatchConfig, match_all
from core.strings import SymbolString
from services.generator_service import GeneratorService

try:
    import psutil
except ImportError:  # pragma: no cover - optional dependency
    psutil = None  # type: ignore[assignment]


@dataclass(frozen=True)
class BenchCase:
    """One periodic instance of the k = m^alpha sweep."""

    n: int
    m: int
    k: int
    alpha: float
    seed: int

    def build(self) -> tuple[SymbolString, SymbolString]:
        period = max(1, min(4, self.k))
        plant = max(1, self.k // 2)
        return GeneratorService(self.seed).periodic_instance(
            self.n, self.m, period, plant, text_plant=self.k // 2
        )


class BenchService:
    """Times the matchers over the k = m^alpha sweep and writes CSV rows."""

    def __init__(
        self,
        algorithms: Sequence[str] = tuple(BENCH_ALGORITHMS),
        lv_max_work: int = BENCH_LV_MAX_WORK,
        threads: int = MAX_WORKER_THREADS,
    ) -> None:
        self.algorithms = ["landau_vishkin" if a == "lv" else a for a in algorithms]
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise InvalidParameterError(f"unknown algorithms: {', '.join(unknown)}")
        self.lv_max_work = lv_max_work
        self.threads = threads

    @staticmethod
    def cases(
        seed: int,
        sizes: Sequence[int] = tuple(BENCH_SIZES),
        alphas: Sequence[float] = tuple(BENCH_ALPHAS),
    ) -> Iterator[BenchCase]:
        """n = 2m and k = floor(m^alpha) for every size and alpha, seeds derived per case."""
        index = 0
        for m in sizes:
            for alpha in alphas:
                k = min(m, max(1, math.floor(m**alpha)))
                case_seed = int(np.random.SeedSequence([seed, index]).generate_state(1)[0])
                yield BenchCase(n=2 * m, m=m, k=k, alpha=alpha, seed=case_seed)
                index += 1

    def run(
        self,
        cases: Sequence[BenchCase] | Iterator[BenchCase],
        on_skip: Callable[[str, BenchCase], None] | None = None,
    ) -> list[BenchRow]:
        rows: list[BenchRow] = []
        for case in cases:
            text, pattern = case.build()
            for algorithm in self.algorithms:
                if algorithm == "landau_vishkin" and case.n * case.k > self.lv_max_work:
                    logging.info(f"bench: skipping landau_vishkin at n={case.n}, k={case.k}")
                    if on_skip:
                        on_skip(algorithm, case)
                    continue
                cfg = MatchConfig(k=case.k, seed=case.seed, algorithm=algorithm, threads=self.threads)
                started = time.perf_counter()
                match_all(text, pattern, cfg)
                ms = (time.perf_counter() - started) * 1000
                rows.append(create_bench_row(algorithm, case.n, case.m, case.k, case.seed, ms))
                self._log_memory(algorithm, case)
        return rows

    @staticmethod
    def _log_memory(algorithm: str, case: BenchCase) -> None:
        if psutil is None:
            return
        rss_mb = psutil.Process().memory_info().rss / (1024 * 1024)
        logging.info(f"bench: {algorithm} n={case.n} k={case.k} rss={rss_mb:.1f} MB")

    @staticmethod
    def write_csv(rows: Sequence[BenchRow], path: str | Path) -> None:
        """Write rows with the fixed header; ``-`` writes to stdout."""
        if str(path) == "-":
            _write(rows, sys.stdout)
            return
        with open(path, "w", newline="", encoding="utf-8") as fh:
            _write(rows, fh)


def _write(rows: Sequence[BenchRow], fh) -> None:  # type: ignore[no-untyped-def]
    writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
