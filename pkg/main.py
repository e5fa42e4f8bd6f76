from __future__ import annotations

"""Command implementations for the kmismatch CLI."""

import argparse
import logging
import sys
from pathlib import Path

import numpy as np
from rich.console import Console

from config import (
    BENCH_ALGORITHMS,
    BENCH_ALPHAS,
    BENCH_LV_MAX_WORK,
    BENCH_SIZES,
    ENABLE_METRICS,
    KMISMATCH_SEED,
    MAX_WORKER_THREADS,
    METRICS_ADDR,
    METRICS_PORT,
    VERIFY_MAX_CELLS,
    t,
)
from core.errors import InvalidParameterError
from core.lb_reduction import LbInstance, decode
from core.pipeline import MatchConfig, match_all
from core.strings import SymbolString
from infrastructure import start_metrics_server
from services import (
    SIDECAR_SUFFIX,
    BenchService,
    GeneratorService,
    VerificationService,
    VerifyGuardError,
    read_instance,
    read_matrix,
    read_sidecar,
    write_instance,
    write_sidecar,
)
from services.instance_io import format_matrix
from ui import bench_table, diff_table
from ui.theme import DOT_FAIL, DOT_OK, GREEN, RED

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

console = Console(stderr=True)


def _seed(args: argparse.Namespace) -> int:
    return KMISMATCH_SEED if args.seed is None else args.seed


def _config(args: argparse.Namespace, k: int, algorithm: str | None = None) -> MatchConfig:
    if k < 0:
        raise InvalidParameterError(t("err_negative_k"))
    overrides = {}
    if getattr(args, "threshold_t", None) is not None:
        overrides["t"] = args.threshold_t
    if getattr(args, "backend", None) is not None:
        overrides["backend"] = args.backend
    return MatchConfig(
        k=k,
        R=getattr(args, "reps", None),
        seed=_seed(args),
        algorithm=algorithm or getattr(args, "algorithm", "auto"),
        threads=getattr(args, "threads", None) or MAX_WORKER_THREADS,
        **overrides,
    )


def _load_pair(args: argparse.Namespace) -> tuple[SymbolString, SymbolString]:
    return read_instance(args.text, args.tokens), read_instance(args.pattern, args.tokens)


# ─────────────────────────────────────────────────────────────────────────────
# match
# ─────────────────────────────────────────────────────────────────────────────

def cmd_match(args: argparse.Namespace) -> int:
    """Print ``<position> <distance>`` or ``<position> -`` for every alignment."""
    cfg = _config(args, args.k)
    text, pattern = _load_pair(args)
    report = match_all(text, pattern, cfg)
    out = sys.stdout
    for line in report.lines():
        out.write(line + "\n")
    out.flush()
    return EXIT_OK


# ─────────────────────────────────────────────────────────────────────────────
# gen
# ─────────────────────────────────────────────────────────────────────────────

def _readable(s: SymbolString, sigma: int) -> SymbolString:
    """Shift small alphabets onto 'a'..'z' for raw-bytes output."""
    return SymbolString(s.symbols + ord("a")) if sigma <= 26 else s


def cmd_gen(args: argparse.Namespace) -> int:
    """Write <out>.text and <out>.pattern (plus the lb sidecar for --kind lb)."""
    gen = GeneratorService(_seed(args))
    prefix = Path(args.out)
    text_path = prefix.with_name(prefix.name + ".text")
    pattern_path = prefix.with_name(prefix.name + ".pattern")
    tokens = args.tokens

    if args.kind == "random":
        text, pattern = gen.random_instance(args.n, args.m, args.sigma)
    elif args.kind == "periodic":
        text, pattern = gen.periodic_instance(args.n, args.m, args.period, args.plant, args.sigma)
    else:
        if not args.from_matrices:
            raise InvalidParameterError("--kind lb needs --from-matrices A B")
        a, b = (read_matrix(p) for p in args.from_matrices)
        inst = gen.lb_instance(a, b)
        text, pattern = inst.text, inst.pattern
        tokens = True
        write_sidecar(prefix.with_name(prefix.name + SIDECAR_SUFFIX), inst.metadata())

    if not tokens and args.kind != "lb":
        text, pattern = _readable(text, args.sigma), _readable(pattern, args.sigma)
    write_instance(text_path, text, tokens)
    write_instance(pattern_path, pattern, tokens)
    console.print(t("gen_written").format(text=text_path, pattern=pattern_path))
    return EXIT_OK


# ─────────────────────────────────────────────────────────────────────────────
# verify
# ─────────────────────────────────────────────────────────────────────────────

def cmd_verify(args: argparse.Namespace) -> int:
    """Exit 0 when the matcher agrees with the brute oracle, 1 otherwise."""
    cfg = _config(args, args.k, algorithm=args.algorithm)
    text, pattern = _load_pair(args)
    try:
        diffs = VerificationService(VERIFY_MAX_CELLS).verify(text, pattern, cfg)
    except VerifyGuardError as exc:
        console.print(t("err_verify_guard").format(cells=exc.cells, limit=exc.limit), style=RED)
        return EXIT_USAGE
    if not diffs:
        console.print(f"[{GREEN}]{DOT_OK}[/{GREEN}] " + t("verify_ok").format(count=len(text) - len(pattern) + 1))
        return EXIT_OK
    console.print(f"[{RED}]{DOT_FAIL}[/{RED}] " + t("verify_mismatch").format(count=len(diffs)))
    console.print(diff_table(diffs))
    return EXIT_MISMATCH


# ─────────────────────────────────────────────────────────────────────────────
# bench
# ─────────────────────────────────────────────────────────────────────────────

def cmd_bench(args: argparse.Namespace) -> int:
    """Run the k = m^alpha sweep and write the CSV."""
    if args.metrics and ENABLE_METRICS:
        start_metrics_server(METRICS_ADDR, METRICS_PORT)
    service = BenchService(
        algorithms=args.algorithms or BENCH_ALGORITHMS,
        lv_max_work=BENCH_LV_MAX_WORK,
        threads=args.threads or MAX_WORKER_THREADS,
    )
    cases = list(service.cases(_seed(args), args.sizes or BENCH_SIZES, args.alphas or BENCH_ALPHAS))

    def on_skip(algorithm: str, case) -> None:  # type: ignore[no-untyped-def]
        console.print(t("bench_skipped").format(algorithm=algorithm, n=case.n, k=case.k), style="dim")

    rows = service.run(cases, on_skip=on_skip)
    service.write_csv(rows, args.output)
    console.print(bench_table(rows))
    if args.output != "-":
        console.print(t("bench_written").format(rows=len(rows), path=args.output))
    return EXIT_OK


# ─────────────────────────────────────────────────────────────────────────────
# decode
# ─────────────────────────────────────────────────────────────────────────────

def cmd_decode(args: argparse.Namespace) -> int:
    """Recover the boolean product from an lb instance written by ``gen --kind lb``."""
    text = read_instance(args.text, tokens=True)
    pattern = read_instance(args.pattern, tokens=True)
    inst = LbInstance.from_metadata(text, pattern, read_sidecar(args.meta))
    cfg = _config(args, inst.mismatch_bound)
    product = decode(inst, match_all(text, pattern, cfg))
    rendered = format_matrix(np.asarray(product))
    if args.output:
        Path(args.output).write_text(rendered, encoding="utf-8")
        console.print(t("decode_written").format(path=args.output))
    else:
        sys.stdout.write(rendered)
    logging.info(f"decode: {inst.rows}x{inst.cols} product, {int(np.count_nonzero(product))} ones")
    return EXIT_OK


COMMANDS = {
    "match": cmd_match,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "decode": cmd_decode,
}
