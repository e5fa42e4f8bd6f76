"""
Command-line entry point: argument parsing, settings overrides, logging and dispatch.
"""

import os
import sys
from typing import Callable


def check_project_dependencies() -> None:
    """
    Check all project dependencies before importing external packages.
    """
    required_packages = ["numpy", "rich", "pydantic", "pydantic_settings"]
    missing_packages = []

    for pkg in required_packages:
        try:
            __import__(pkg)
        except ImportError:
            missing_packages.append(pkg)

    if missing_packages:
        from config import t
        print(t("err_missing_deps"))
        for pkg in missing_packages:
            print(f"  - {pkg}")
        print(f"\n{t('install_deps_hint')}")
        print("  pip install -r requirements.txt")
        sys.exit(2)


def _bounded_int(minimum: int) -> Callable[[str], int]:
    """argparse type accepting integers >= ``minimum``."""
    import argparse

    def parse(value: str) -> int:
        try:
            number = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer: {value!r}") from None
        if number < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {number}")
        return number

    return parse


def _csv_ints(value: str) -> list[int]:
    parse = _bounded_int(1)
    return [parse(x) for x in value.split(",") if x.strip()]


def _csv_floats(value: str) -> list[float]:
    import argparse

    values = [float(x) for x in value.split(",") if x.strip()]
    if any(not 0 < v <= 1 for v in values):
        raise argparse.ArgumentTypeError(f"exponents must lie in (0, 1], got {value!r}")
    return values


def _csv_words(value: str) -> list[str]:
    return [x.strip() for x in value.split(",") if x.strip()]


def build_parser():  # type: ignore[no-untyped-def]
    import argparse

    positive, non_negative = _bounded_int(1), _bounded_int(0)
    algorithms = ["auto", "brute", "lv", "landau_vishkin", "abrahamson", "paper"]

    parser = argparse.ArgumentParser(
        description="Pattern matching with k mismatches (Hamming distance)",
        prog="kmismatch",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Mirror log records to stderr")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=non_negative, help="Master seed (default: KMISMATCH_SEED or 0)")
    common.add_argument("--threads", type=positive, help="Worker threads for window matching")
    common.add_argument("--backend", choices=["fft", "ntt"], help="Convolution backend")

    matching = argparse.ArgumentParser(add_help=False)
    matching.add_argument("text", help="Text instance file")
    matching.add_argument("pattern", help="Pattern instance file")
    matching.add_argument("-k", type=int, required=True, help="Mismatch budget")
    matching.add_argument("--tokens", action="store_true", help="Whitespace-separated integer tokens")
    matching.add_argument("--reps", type=positive, help="Estimator repetitions R")
    matching.add_argument("--threshold-t", type=positive, dest="threshold_t", help="Heavy/light run threshold")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("match", parents=[common, matching], help="Report distances for every alignment")
    p.add_argument("--algorithm", choices=algorithms, default="auto")

    p = sub.add_parser("verify", parents=[common, matching], help="Compare against the brute-force oracle")
    p.add_argument("--algorithm", choices=algorithms, default="paper")

    p = sub.add_parser("gen", parents=[common], help="Generate instance files")
    p.add_argument("--kind", choices=["random", "periodic", "lb"], required=True)
    p.add_argument("--out", required=True, help="Output prefix (<out>.text, <out>.pattern)")
    p.add_argument("--n", type=positive, default=1024, help="Text length")
    p.add_argument("--m", type=positive, default=256, help="Pattern length")
    p.add_argument("--sigma", type=positive, default=26, help="Alphabet size")
    p.add_argument("--period", type=positive, default=2, help="Period of periodic instances")
    p.add_argument("--plant", type=non_negative, default=0, help="Planted substitutions in the pattern")
    p.add_argument("--from-matrices", nargs=2, metavar=("A", "B"), dest="from_matrices")
    p.add_argument("--tokens", action="store_true", help="Write integer tokens instead of bytes")

    p = sub.add_parser("bench", parents=[common], help="Benchmark sweep over k = m^alpha")
    p.add_argument("--output", "-o", default="-", help="CSV path, '-' for stdout")
    p.add_argument("--sizes", type=_csv_ints, help="Comma-separated pattern lengths")
    p.add_argument("--alphas", type=_csv_floats, help="Comma-separated exponents in (0, 1]")
    p.add_argument("--algorithms", type=_csv_words, help="Comma-separated algorithm names")
    p.add_argument("--metrics", action="store_true", help="Expose Prometheus metrics while running")

    p = sub.add_parser("decode", parents=[common], help="Decode a matrix product from an lb instance")
    p.add_argument("meta", help=".lb.json sidecar written by gen --kind lb")
    p.add_argument("text")
    p.add_argument("pattern")
    p.add_argument("--output", "-o", help="Write the product matrix here instead of stdout")
    return parser


def main(argv: list[str] | None = None) -> int:
    """CLI entry point for kmismatch."""
    import logging

    parser = build_parser()
    args = parser.parse_args(argv)

    # Set env vars BEFORE config module is imported by other modules
    if args.seed is not None:
        os.environ["KMISMATCH_SEED"] = str(args.seed)
    if args.threads is not None:
        os.environ["MAX_WORKER_THREADS"] = str(args.threads)
    if args.backend is not None:
        os.environ["CONVOLUTION_BACKEND"] = args.backend

    check_project_dependencies()

    from pydantic import ValidationError

    try:
        from config import LOG_DIR, LOG_FILE, LOG_LEVEL, LOG_TRUNCATE_ON_START, VERSION, t
    except ValidationError as exc:
        # settings come from the environment; i18n is not loaded yet
        print(f"Invalid settings: {exc}", file=sys.stderr)
        return 2
    from core.errors import KMismatchError

    os.makedirs(LOG_DIR, exist_ok=True)
    logging.basicConfig(
        filename=LOG_FILE,
        filemode='w' if LOG_TRUNCATE_ON_START else 'a',
        level=getattr(logging, LOG_LEVEL.upper()),
        format="%(asctime)s %(levelname)s %(message)s",
        encoding="utf-8",
    )
    if args.verbose:
        from rich.logging import RichHandler
        logging.getLogger().addHandler(RichHandler(show_path=False))
    logging.info(f"kmismatch v{VERSION}: {args.command}")

    from main import COMMANDS, console

    try:
        return COMMANDS[args.command](args)
    except OSError as exc:
        path = getattr(exc, "filename", None) or "?"
        console.print(t("err_file_unreadable").format(path=path, error=exc.strerror or exc), style="bold red")
        logging.error(f"{args.command}: {exc}")
        return 2
    except KMismatchError as exc:
        console.print(t("err_invalid_input").format(error=exc), style="bold red")
        logging.error(f"{args.command}: {exc}")
        return 2
    except ValidationError as exc:
        console.print(t("err_invalid_settings").format(error=exc), style="bold red")
        logging.error(f"{args.command}: {exc}")
        return 2
