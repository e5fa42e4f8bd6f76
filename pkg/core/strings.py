"""
Integer-symbol strings, runs and stride encodings.

Every string in the package is a ``SymbolString``: an immutable numpy array of
non-negative integer codes.  Two codes at the top of the range are reserved as
sentinels: ``TEXT_SENTINEL`` (rendered ``#``) only ever appears on the text
side and ``PAT_SENTINEL`` (rendered ``$``) only on the pattern side, so plain
code inequality makes them mismatch everything on the opposite side.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from core.errors import InvalidParameterError, LengthMismatchError

SYMBOL_DTYPE = np.int64

# Input codes must stay below this bound; the space above it is reserved.
MAX_SYMBOL = 2**31 - 16
TEXT_SENTINEL = 2**31 - 2
PAT_SENTINEL = 2**31 - 1

_RENDER_SENTINELS = {TEXT_SENTINEL: "#", PAT_SENTINEL: "$"}
_PARSE_SENTINELS = {"#": TEXT_SENTINEL, "$": PAT_SENTINEL}


# ─────────────────────────────────────────────────────────────────────────────
# SymbolString
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class SymbolString:
    """Immutable sequence of integer symbol codes.

    Attributes:
        symbols: 1-D read-only int64 array.
        alphabet_hint: optional number of distinct codes, carried along by
            generators so consumers can size tables without a scan.
    """

    symbols: np.ndarray
    alphabet_hint: int | None = None

    def __post_init__(self) -> None:
        arr = np.asarray(self.symbols, dtype=SYMBOL_DTYPE)
        if arr.ndim != 1:
            raise InvalidParameterError(f"symbols must be one-dimensional, got shape {arr.shape}")
        if arr.size and (int(arr.min()) < 0 or int(arr.max()) > PAT_SENTINEL):
            raise InvalidParameterError("symbol codes must lie in [0, 2^31)")
        if arr.flags.writeable:
            arr = arr.copy()
            arr.setflags(write=False)
        object.__setattr__(self, "symbols", arr)

    # ── constructors ─────────────────────────────────────────────────────

    @classmethod
    def from_text(cls, text: str, *, sentinels: bool = False) -> SymbolString:
        """Promote a str to code points; with ``sentinels`` '#' and '$' map to the reserved codes."""
        if sentinels:
            codes = [_PARSE_SENTINELS.get(ch, ord(ch)) for ch in text]
        else:
            codes = [ord(ch) for ch in text]
        return cls(np.array(codes, dtype=SYMBOL_DTYPE))

    @classmethod
    def from_bytes(cls, data: bytes) -> SymbolString:
        """Each byte becomes one symbol."""
        return cls(np.frombuffer(data, dtype=np.uint8).astype(SYMBOL_DTYPE), alphabet_hint=256)

    @classmethod
    def from_tokens(cls, tokens: Iterable[int], alphabet_hint: int | None = None) -> SymbolString:
        """Build from user-supplied codes, rejecting the reserved range."""
        arr = np.fromiter((int(x) for x in tokens), dtype=SYMBOL_DTYPE)
        if arr.size and int(arr.max()) >= MAX_SYMBOL:
            raise InvalidParameterError(f"token values must be < {MAX_SYMBOL}")
        return cls(arr, alphabet_hint=alphabet_hint)

    @classmethod
    def concat(cls, parts: Sequence[SymbolString]) -> SymbolString:
        if not parts:
            return cls(np.empty(0, dtype=SYMBOL_DTYPE))
        return cls(np.concatenate([p.symbols for p in parts]))

    @classmethod
    def filled(cls, code: int, length: int) -> SymbolString:
        return cls(np.full(length, code, dtype=SYMBOL_DTYPE))

    # ── sequence protocol ────────────────────────────────────────────────

    def __len__(self) -> int:
        return int(self.symbols.shape[0])

    def __getitem__(self, item: int | slice) -> int | SymbolString:
        if isinstance(item, slice):
            return SymbolString(self.symbols[item], alphabet_hint=self.alphabet_hint)
        return int(self.symbols[item])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolString):
            return NotImplemented
        return bool(np.array_equal(self.symbols, other.symbols))

    def __hash__(self) -> int:
        return hash(self.symbols.tobytes())

    def __repr__(self) -> str:
        preview = self.render() if len(self) <= 40 else self.render()[:37] + "..."
        return f"SymbolString({preview!r}, n={len(self)})"

    # ── helpers ──────────────────────────────────────────────────────────

    def slice(self, start: int, stop: int) -> SymbolString:
        return SymbolString(self.symbols[start:stop], alphabet_hint=self.alphabet_hint)

    def tolist(self) -> list[int]:
        return [int(x) for x in self.symbols]

    def render(self) -> str:
        """Readable form: sentinels as '#'/'$', printable codes as characters, others as <n>."""
        out = []
        for code in self.symbols.tolist():
            if code in _RENDER_SENTINELS:
                out.append(_RENDER_SENTINELS[code])
            elif 32 <= code < 0x110000 and chr(code).isprintable():
                out.append(chr(code))
            else:
                out.append(f"<{code}>")
        return "".join(out)

    def has_text_sentinel(self) -> bool:
        return bool(np.any(self.symbols == TEXT_SENTINEL))

    def has_pattern_sentinel(self) -> bool:
        return bool(np.any(self.symbols == PAT_SENTINEL))

    def check_text(self) -> SymbolString:
        """Raise if the pattern sentinel occurs in a string used as text."""
        if self.has_pattern_sentinel():
            raise InvalidParameterError("pattern sentinel '$' must not occur in a text")
        return self

    def check_pattern(self) -> SymbolString:
        """Raise if the text sentinel occurs in a string used as pattern."""
        if self.has_text_sentinel():
            raise InvalidParameterError("text sentinel '#' must not occur in a pattern")
        return self


def is_sentinel(code: int) -> bool:
    return code == TEXT_SENTINEL or code == PAT_SENTINEL


# ─────────────────────────────────────────────────────────────────────────────
# Runs
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Run:
    """Maximal block of one symbol."""

    symbol: int
    start: int
    length: int

    @property
    def end(self) -> int:
        """Inclusive index of the last position."""
        return self.start + self.length - 1


@dataclass(frozen=True, eq=False)
class RleView:
    """Run-length view of a string, held as parallel arrays.

    ``runs`` and ``by_symbol`` materialize ``Run`` objects lazily; the
    vectorized consumers use ``symbols``/``starts``/``lengths`` directly.
    """

    symbols: np.ndarray
    starts: np.ndarray
    lengths: np.ndarray

    def __len__(self) -> int:
        return int(self.symbols.shape[0])

    @property
    def total_length(self) -> int:
        return int(self.lengths.sum())

    @property
    def ends(self) -> np.ndarray:
        return self.starts + self.lengths - 1

    @cached_property
    def runs(self) -> tuple[Run, ...]:
        return tuple(
            Run(int(c), int(s), int(ln))
            for c, s, ln in zip(self.symbols.tolist(), self.starts.tolist(), self.lengths.tolist())
        )

    @cached_property
    def indices_by_symbol(self) -> Mapping[int, np.ndarray]:
        """symbol -> ascending indices into the run arrays."""
        order = np.argsort(self.symbols, kind="stable")
        sorted_syms = self.symbols[order]
        cuts = np.flatnonzero(np.diff(sorted_syms)) + 1
        groups = np.split(order, cuts) if order.size else []
        return {int(self.symbols[g[0]]): g for g in groups}

    @cached_property
    def by_symbol(self) -> Mapping[int, tuple[Run, ...]]:
        runs = self.runs
        return {c: tuple(runs[i] for i in idx.tolist()) for c, idx in self.indices_by_symbol.items()}

    def runs_of(self, symbol: int) -> int:
        idx = self.indices_by_symbol.get(symbol)
        return 0 if idx is None else int(idx.size)


def rle_view(s: SymbolString) -> RleView:
    """Decompose ``s`` into maximal runs."""
    arr = s.symbols
    if arr.size == 0:
        empty = np.empty(0, dtype=SYMBOL_DTYPE)
        return RleView(empty, empty.copy(), empty.copy())
    starts = np.concatenate(([0], np.flatnonzero(arr[1:] != arr[:-1]) + 1)).astype(SYMBOL_DTYPE)
    lengths = np.diff(np.concatenate((starts, [arr.size]))).astype(SYMBOL_DTYPE)
    return RleView(arr[starts].copy(), starts, lengths)


def runs_count(s: SymbolString) -> int:
    """Number of maximal runs; 0 for the empty string."""
    arr = s.symbols
    if arr.size == 0:
        return 0
    return 1 + int(np.count_nonzero(arr[1:] != arr[:-1]))


# ─────────────────────────────────────────────────────────────────────────────
# Stride encodings
# ─────────────────────────────────────────────────────────────────────────────

def _check_stride(ell: int) -> None:
    if ell < 1:
        raise InvalidParameterError(f"stride must be >= 1, got {ell}")


def subsample(s: SymbolString, ell: int, i: int) -> SymbolString:
    """Residue class ``s[i] s[i+ell] s[i+2ell] ...``."""
    _check_stride(ell)
    if not 0 <= i < ell:
        raise InvalidParameterError(f"residue {i} outside [0, {ell})")
    return s.slice(0, len(s)) if ell == 1 else SymbolString(s.symbols[i::ell])


def ell_encoding(s: SymbolString, ell: int) -> SymbolString:
    """Concatenation of the ``ell`` residue classes of ``s``."""
    _check_stride(ell)
    if len(s) % ell == 0:
        return SymbolString(s.symbols.reshape(-1, ell).T.ravel())
    return SymbolString.concat([subsample(s, ell, i) for i in range(ell)])


def runs_ell(s: SymbolString, ell: int) -> int:
    """Sum of run counts over the ``ell`` residue classes.

    Equals (number of non-empty classes) + #{j : s[j] != s[j+ell]}, since
    every class boundary inside a residue class is one unequal pair at
    distance ``ell``.
    """
    _check_stride(ell)
    arr = s.symbols
    n = arr.size
    if n == 0:
        return 0
    changes = int(np.count_nonzero(arr[:-ell] != arr[ell:])) if n > ell else 0
    return min(ell, n) + changes


# ─────────────────────────────────────────────────────────────────────────────
# Hamming primitives
# ─────────────────────────────────────────────────────────────────────────────

def hamming(a: SymbolString, b: SymbolString) -> int:
    """Number of positions where equal-length strings differ."""
    if len(a) != len(b):
        raise LengthMismatchError(f"hamming needs equal lengths, got {len(a)} and {len(b)}")
    return int(np.count_nonzero(a.symbols != b.symbols))


def x_period_distance(s: SymbolString, pi: int, cap: int) -> int | None:
    """Distance between ``s[pi:]`` and ``s[:-pi]``, or None once it exceeds ``cap``."""
    n = len(s)
    if not 1 <= pi < n:
        raise InvalidParameterError(f"shift {pi} outside [1, {n})")
    distance = int(np.count_nonzero(s.symbols[pi:] != s.symbols[: n - pi]))
    return distance if distance <= cap else None
