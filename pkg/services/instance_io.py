"""Instance files: token mode, raw-bytes mode, boolean matrices and lb sidecars."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np

from core.errors import InstanceFormatError
from core.strings import MAX_SYMBOL, SymbolString

# Sidecar written next to lb instances; holds the matrix dimensions.
SIDECAR_SUFFIX = ".lb.json"


def read_instance(path: str | Path, tokens: bool = True) -> SymbolString:
    """Load a header-free instance file.

    Token mode expects whitespace-separated non-negative decimal integers
    below MAX_SYMBOL; raw mode maps each byte to one symbol.
    """
    data = Path(path).read_bytes()
    if not tokens:
        return SymbolString.from_bytes(data)

    words = data.split()
    try:
        values = np.array([int(w) for w in words], dtype=np.int64)
    except ValueError as exc:
        raise InstanceFormatError(f"{path}: not a list of integers ({exc})") from exc
    if values.size and int(values.min()) < 0:
        raise InstanceFormatError(f"{path}: negative token")
    if values.size and int(values.max()) >= MAX_SYMBOL:
        raise InstanceFormatError(f"{path}: token values must be < {MAX_SYMBOL}")
    logging.debug(f"Read {values.size} tokens from {path}")
    return SymbolString(values)


def write_instance(path: str | Path, s: SymbolString, tokens: bool = True) -> None:
    if tokens:
        Path(path).write_text(" ".join(map(str, s.tolist())) + "\n", encoding="ascii")
        return
    if len(s) and int(s.symbols.max()) > 255:
        raise InstanceFormatError("raw-bytes mode needs symbols below 256; use token mode")
    Path(path).write_bytes(s.symbols.astype(np.uint8).tobytes())


def read_matrix(path: str | Path) -> np.ndarray:
    """Boolean matrix, one row per line, entries 0/1 separated by whitespace."""
    rows = [line.split() for line in Path(path).read_text(encoding="utf-8").splitlines() if line.strip()]
    if not rows:
        raise InstanceFormatError(f"{path}: empty matrix")
    if len({len(r) for r in rows}) != 1:
        raise InstanceFormatError(f"{path}: rows have different lengths")
    try:
        matrix = np.array([[int(x) for x in r] for r in rows], dtype=np.int64)
    except ValueError as exc:
        raise InstanceFormatError(f"{path}: {exc}") from exc
    if not np.isin(matrix, (0, 1)).all():
        raise InstanceFormatError(f"{path}: entries must be 0 or 1")
    return matrix.astype(bool)


def format_matrix(matrix: np.ndarray) -> str:
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in np.asarray(matrix))


def write_matrix(path: str | Path, matrix: np.ndarray) -> None:
    Path(path).write_text(format_matrix(matrix), encoding="utf-8")


def write_sidecar(path: str | Path, meta: dict[str, Any]) -> None:
    Path(path).write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def read_sidecar(path: str | Path) -> dict[str, Any]:
    try:
        meta = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(meta, dict):
        raise InstanceFormatError(f"{path}: expected a JSON object")
    return meta
