"""Tests for the kmismatch command line (kmismatch/__init__.py and main.py)."""
from __future__ import annotations

import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

import config
from core.oracle import DistanceReport, bool_matmul
from core.pipeline import MatchConfig
from kmismatch import build_parser, main
from services.instance_io import format_matrix, write_matrix


@pytest.fixture(autouse=True)
def _log_to_tmp(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(config, "LOG_DIR", str(tmp_path))
    monkeypatch.setattr(config, "LOG_FILE", str(tmp_path / "kmismatch.log"))
    # main() exports these for the settings layer; restore them afterwards
    for name, value in (("KMISMATCH_SEED", "0"), ("MAX_WORKER_THREADS", "4"), ("CONVOLUTION_BACKEND", "fft")):
        monkeypatch.setenv(name, value)


def write_pair(tmp_path: Path, text: str, pattern: str) -> tuple[str, str]:
    text_path, pattern_path = tmp_path / "x.text", tmp_path / "x.pattern"
    text_path.write_bytes(text.encode())
    pattern_path.write_bytes(pattern.encode())
    return str(text_path), str(pattern_path)


class TestParser:
    def test_requires_k(self) -> None:
        with pytest.raises(SystemExit):
            build_parser().parse_args(["match", "a", "b"])

    def test_common_options(self) -> None:
        args = build_parser().parse_args(["match", "a", "b", "-k", "2", "--seed", "9", "--backend", "ntt"])
        assert (args.k, args.seed, args.backend, args.algorithm) == (2, 9, "ntt", "auto")

    def test_bench_lists(self) -> None:
        args = build_parser().parse_args(["bench", "--sizes", "16,32", "--alphas", "0.5,1"])
        assert args.sizes == [16, 32]
        assert args.alphas == [0.5, 1.0]


class TestMatchCommand:
    """kmismatch match."""

    def test_output_lines(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        text, pattern = write_pair(tmp_path, "abab", "ab")
        assert main(["match", text, pattern, "-k", "1"]) == 0
        assert capsys.readouterr().out == "0 0\n1 -\n2 0\n"

    def test_k_at_least_m(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        text, pattern = write_pair(tmp_path, "abcab", "ab")
        assert main(["match", text, pattern, "-k", "5"]) == 0
        assert capsys.readouterr().out == "0 0\n1 2\n2 2\n3 0\n"

    def test_tokens(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        text, pattern = write_pair(tmp_path, "10 20 10 20 10\n", "10 20\n")
        assert main(["match", text, pattern, "-k", "0", "--tokens", "--algorithm", "lv"]) == 0
        assert capsys.readouterr().out == "0 0\n1 -\n2 0\n3 -\n"

    def test_deterministic(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        rng = np.random.default_rng(0)
        text, pattern = write_pair(
            tmp_path,
            "".join(rng.choice(list("acgt"), size=300)),
            "".join(rng.choice(list("acgt"), size=40)),
        )
        argv = ["match", text, pattern, "-k", "20", "--algorithm", "paper", "--seed", "3", "--reps", "16"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first
        assert len(first.splitlines()) == 261

    def test_unreadable_file(self, tmp_path: Path) -> None:
        assert main(["match", str(tmp_path / "missing"), str(tmp_path / "missing2"), "-k", "1"]) == 2

    def test_negative_k(self, tmp_path: Path) -> None:
        text, pattern = write_pair(tmp_path, "abab", "ab")
        assert main(["match", text, pattern, "-k", "-1"]) == 2

    def test_pattern_longer_than_text(self, tmp_path: Path) -> None:
        text, pattern = write_pair(tmp_path, "ab", "abc")
        assert main(["match", text, pattern, "-k", "1"]) == 2


class TestVerifyCommand:
    """kmismatch verify."""

    def test_agrees(self, tmp_path: Path) -> None:
        text, pattern = write_pair(tmp_path, "abracadabra" * 10, "abracad")
        assert main(["verify", text, pattern, "-k", "3", "--reps", "16"]) == 0

    def test_mismatch_exit_code(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        def broken(text, pattern, cfg):  # type: ignore[no-untyped-def]
            return DistanceReport.all_exceeding(len(text) - len(pattern) + 1, cfg.k)

        monkeypatch.setattr("services.verification_service.match_all", broken)
        text, pattern = write_pair(tmp_path, "abab", "ab")
        assert main(["verify", text, pattern, "-k", "1"]) == 1

    def test_guard(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        import main as commands

        monkeypatch.setattr(commands, "VERIFY_MAX_CELLS", 1)
        text, pattern = write_pair(tmp_path, "abab", "ab")
        assert main(["verify", text, pattern, "-k", "1"]) == 2


class TestGenCommand:
    """kmismatch gen, and decode for lb instances."""

    def test_random_unary(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        out = tmp_path / "u"
        assert main(["gen", "--kind", "random", "--out", str(out), "--n", "20", "--m", "5", "--sigma", "1"]) == 0
        assert (tmp_path / "u.text").read_bytes() == b"a" * 20
        assert (tmp_path / "u.pattern").read_bytes() == b"a" * 5
        assert main(["match", str(tmp_path / "u.text"), str(tmp_path / "u.pattern"), "-k", "0"]) == 0
        assert capsys.readouterr().out == "".join(f"{i} 0\n" for i in range(16))

    def test_periodic_tokens(self, tmp_path: Path) -> None:
        out = tmp_path / "p"
        argv = ["gen", "--kind", "periodic", "--out", str(out), "--n", "64", "--m", "16",
                "--period", "3", "--plant", "1", "--tokens", "--seed", "4"]
        assert main(argv) == 0
        assert len((tmp_path / "p.text").read_text().split()) == 64
        assert len((tmp_path / "p.pattern").read_text().split()) == 16

    def test_lb_and_decode(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        a = np.array([[1, 0], [0, 1], [1, 1]], dtype=bool)
        b = np.array([[0, 1], [1, 0]], dtype=bool)
        write_matrix(tmp_path / "A", a)
        write_matrix(tmp_path / "B", b)
        out = tmp_path / "lb"
        argv = ["gen", "--kind", "lb", "--out", str(out), "--from-matrices", str(tmp_path / "A"), str(tmp_path / "B")]
        assert main(argv) == 0
        assert (tmp_path / "lb.lb.json").exists()
        argv = ["decode", str(tmp_path / "lb.lb.json"), str(tmp_path / "lb.text"), str(tmp_path / "lb.pattern")]
        assert main(argv) == 0
        assert capsys.readouterr().out == format_matrix(bool_matmul(a, b))

    def test_lb_needs_matrices(self, tmp_path: Path) -> None:
        assert main(["gen", "--kind", "lb", "--out", str(tmp_path / "lb")]) == 2


class TestBenchCommand:
    """kmismatch bench."""

    def test_csv_to_file(self, tmp_path: Path) -> None:
        out = tmp_path / "bench.csv"
        argv = ["bench", "-o", str(out), "--sizes", "16", "--alphas", "0.5,1",
                "--algorithms", "paper,lv,abrahamson", "--threads", "1"]
        assert main(argv) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "algorithm,n,m,k,seed,ms"
        assert len(lines) == 1 + 2 * 3

    def test_csv_to_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["bench", "--sizes", "16", "--alphas", "0.5", "--algorithms", "abrahamson"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "algorithm,n,m,k,seed,ms"
        assert lines[1].startswith("abrahamson,32,16,4,")


class TestExitCodes:
    """Bad parameters exit 2 and never look like a verify mismatch."""

    @pytest.mark.parametrize(
        "flags",
        [
            ["--reps", "0"],
            ["--threshold-t", "0"],
            ["--threads", "0"],
            ["--seed", "-1"],
            ["--reps", "two"],
        ],
    )
    @pytest.mark.parametrize("command", ["match", "verify"])
    def test_rejected_numeric_flags(self, tmp_path: Path, command: str, flags: list[str]) -> None:
        text, pattern = write_pair(tmp_path, "abab", "ab")
        with pytest.raises(SystemExit) as excinfo:
            main([command, text, pattern, "-k", "1", *flags])
        assert excinfo.value.code == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["gen", "--kind", "random", "--out", "x", "--n", "0"],
            ["gen", "--kind", "periodic", "--out", "x", "--plant", "-3"],
            ["bench", "--sizes", "16,0"],
            ["bench", "--alphas", "0.5,1.5"],
        ],
    )
    def test_rejected_generator_flags(self, argv: list[str]) -> None:
        with pytest.raises(SystemExit) as excinfo:
            main(argv)
        assert excinfo.value.code == 2

    def test_validation_error_in_command(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        import main as commands

        def invalid(args):  # type: ignore[no-untyped-def]
            MatchConfig(k=-1)
            return 0

        monkeypatch.setitem(commands.COMMANDS, "verify", invalid)
        text, pattern = write_pair(tmp_path, "abab", "ab")
        assert main(["verify", text, pattern, "-k", "1"]) == 2

    def test_unknown_bench_algorithm(self) -> None:
        assert main(["bench", "--sizes", "16", "--alphas", "0.5", "--algorithms", "magic"]) == 2

    def test_invalid_environment(self, tmp_path: Path) -> None:
        text, pattern = write_pair(tmp_path, "abab", "ab")
        env = {
            **os.environ,
            "MAX_WORKER_THREADS": "0",
            "LOG_DIR": str(tmp_path),
            "LOG_FILE": str(tmp_path / "kmismatch.log"),
        }
        result = subprocess.run(
            [sys.executable, "-m", "kmismatch", "match", text, pattern, "-k", "1"],
            cwd=Path(__file__).resolve().parent.parent,
            env=env,
            capture_output=True,
            text=True,
        )
        assert result.returncode == 2
        assert "Traceback" not in result.stderr

    def test_match_config_bounds(self) -> None:
        with pytest.raises(ValidationError):
            MatchConfig(k=1, R=0)
