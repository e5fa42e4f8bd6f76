from __future__ import annotations

import logging

import numpy as np

from config import VERIFY_MAX_CELLS, ReportDiff, create_report_diff
from core.errors import InvalidParameterError
from core.oracle import DistanceReport, brute_distances
from core.pipeline import MatchConfig, match_all
from core.strings import SymbolString


class VerifyGuardError(InvalidParameterError):
    """Instance too large for the brute-force oracle."""

    def __init__(self, cells: int, limit: int) -> None:
        super().__init__(f"n*m = {cells} exceeds {limit}")
        self.cells = cells
        self.limit = limit


class VerificationService:
    """Runs a matcher and the brute oracle on the same instance and diffs the reports."""

    def __init__(self, max_cells: int = VERIFY_MAX_CELLS) -> None:
        self.max_cells = max_cells

    @staticmethod
    def compare(expected: DistanceReport, actual: DistanceReport) -> list[ReportDiff]:
        if len(expected) != len(actual):
            raise InvalidParameterError(f"reports cover {len(expected)} and {len(actual)} alignments")
        differ = np.flatnonzero(expected.distances != actual.distances)
        return [
            create_report_diff(int(i), expected.entry(i), actual.entry(i))
            for i in differ.tolist()
        ]

    def verify(self, text: SymbolString, pattern: SymbolString, cfg: MatchConfig) -> list[ReportDiff]:
        """Differences between ``match_all`` and the oracle; empty when they agree."""
        cells = len(text) * len(pattern)
        if cells > self.max_cells:
            raise VerifyGuardError(cells, self.max_cells)
        actual = match_all(text, pattern, cfg)
        expected = brute_distances(text, pattern, cfg.k)
        diffs = self.compare(expected, actual)
        logging.info(f"verify: {len(diffs)} differences over {len(expected)} alignments")
        return diffs
