"""
Core algorithms for k-mismatch pattern matching.

This package provides:
- strings: SymbolString, runs and stride encodings
- oracle: brute-force references and DistanceReport
- lce: LCE index, kangaroo verification, Landau-Vishkin
- convolution / ntt: correlation engine and the Abrahamson baseline
- karloff: approximate distances by random projections
- kernel: period detection, trimming, rearrangement
- rle_match: exact matching on the kernelized pair
- pipeline: MatchConfig, match_all, window_match
- lb_reduction: boolean matrix product encoder/decoder
"""

from .errors import (
    KMismatchError,
    LengthMismatchError,
    InvalidParameterError,
    PrecisionError,
    InstanceFormatError,
)
from .strings import (
    SymbolString,
    Run,
    RleView,
    TEXT_SENTINEL,
    PAT_SENTINEL,
    MAX_SYMBOL,
    hamming,
    runs_count,
    subsample,
    ell_encoding,
    runs_ell,
    rle_view,
    x_period_distance,
)
from .oracle import EXCEEDS, DistanceReport, brute_distances, bool_matmul
from .lce import LceIndex, build_lce, verify_alignment, verify_many, landau_vishkin
from .convolution import (
    CorrelationPlan,
    SymbolCorrelator,
    count_symbol_matches,
    count_binary_mismatches,
    abrahamson_distances,
)
from .karloff import Estimate, estimate_distances, self_estimates, default_repetitions
from .kernel import (
    NoSmallPeriod,
    SmallPeriod,
    KernelInstance,
    detect_period,
    trim_text,
    rearrange,
    map_alignment,
    occurrence_spacing_ok,
)
from .rle_match import (
    DerivativeAccumulator,
    classify_letters,
    apply_run_pair,
    recover_counts,
    recover_by_recurrence,
    star_distances,
    kernel_distances,
)
from .pipeline import MatchConfig, match_all, window_match
from .lb_reduction import LbInstance, encode, decode

__all__ = [
    # Errors
    "KMismatchError",
    "LengthMismatchError",
    "InvalidParameterError",
    "PrecisionError",
    "InstanceFormatError",
    # Strings
    "SymbolString",
    "Run",
    "RleView",
    "TEXT_SENTINEL",
    "PAT_SENTINEL",
    "MAX_SYMBOL",
    "hamming",
    "runs_count",
    "subsample",
    "ell_encoding",
    "runs_ell",
    "rle_view",
    "x_period_distance",
    # Oracles
    "EXCEEDS",
    "DistanceReport",
    "brute_distances",
    "bool_matmul",
    # LCE
    "LceIndex",
    "build_lce",
    "verify_alignment",
    "verify_many",
    "landau_vishkin",
    # Convolution
    "CorrelationPlan",
    "SymbolCorrelator",
    "count_symbol_matches",
    "count_binary_mismatches",
    "abrahamson_distances",
    # Estimator
    "Estimate",
    "estimate_distances",
    "self_estimates",
    "default_repetitions",
    # Kernel
    "NoSmallPeriod",
    "SmallPeriod",
    "KernelInstance",
    "detect_period",
    "trim_text",
    "rearrange",
    "map_alignment",
    "occurrence_spacing_ok",
    # Run-length matching
    "DerivativeAccumulator",
    "classify_letters",
    "apply_run_pair",
    "recover_counts",
    "recover_by_recurrence",
    "star_distances",
    "kernel_distances",
    # Pipeline
    "MatchConfig",
    "match_all",
    "window_match",
    # Lower-bound reduction
    "LbInstance",
    "encode",
    "decode",
]
