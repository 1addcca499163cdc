"""Completion-count tables over a compiled automaton.

``C[t][q]`` is the number of accepted continuations of length ``t`` from state
``q``.  With it, the number of language words sharing a prefix is a single
lookup, ``N(x1..xr) = C[n - r][state(x1..xr)]``, and ``C[n][initial]`` is the
size of the language.  All counts are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .automaton import Automaton, step_word
from .errors import EmptyLanguage, FingerprintMismatch, FormatError, LengthMismatch

MAGIC = "CCTBL 1"


@dataclass(frozen=True, eq=False)
class CountTable:
    n: int
    layers: tuple[tuple[int, ...], ...]
    fingerprint: str = ""

    @property
    def state_count(self) -> int:
        return len(self.layers[0])

    def __eq__(self, other):
        if not isinstance(other, CountTable):
            return NotImplemented
        return (self.n, self.layers, self.fingerprint) == (other.n, other.layers, other.fingerprint)


def _live_rows(aut: Automaton) -> list[list[int]]:
    return [[t for t in row if t is not None] for row in aut.transitions]


def build_count_table(aut: Automaton, n: int, fingerprint: str = "") -> CountTable:
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    rows = _live_rows(aut)
    prev = tuple(1 if acc else 0 for acc in aut.accepting)
    layers = [prev]
    for _ in range(n):
        prev = tuple(sum(prev[t] for t in row) for row in rows)
        layers.append(prev)
    return CountTable(n, tuple(layers), fingerprint)


def streaming_counts(aut: Automaton, n: int) -> tuple[int, ...]:
    """Top layer ``C[n][*]`` keeping only two layers in memory."""
    rows = _live_rows(aut)
    prev = [1 if acc else 0 for acc in aut.accepting]
    for _ in range(n):
        prev = [sum(prev[t] for t in row) for row in rows]
    return tuple(prev)


def completions(table: CountTable, t: int, q: int) -> int:
    if not 0 <= t <= table.n:
        raise IndexError(f"remaining length {t} outside 0..{table.n}")
    if not 0 <= q < table.state_count:
        raise IndexError(f"state {q} outside 0..{table.state_count - 1}")
    return table.layers[t][q]


def prefix_count(table: CountTable, aut: Automaton, prefix=()) -> int:
    """Number of language words that start with ``prefix``."""
    prefix = tuple(prefix)
    if len(prefix) > table.n:
        raise LengthMismatch(f"prefix of length {len(prefix)} exceeds n={table.n}")
    q = step_word(aut, prefix)
    if q is None:
        return 0
    return table.layers[table.n - len(prefix)][q]


def cardinality(table: CountTable, aut: Automaton | None = None) -> int:
    q = 0 if aut is None else aut.initial
    return table.layers[table.n][q]


class PayloadWidth(NamedTuple):
    k: int  # floor(log2 |S|): payload bits per block
    rank_width: int  # ceil(log2 |S|): bits needed to write any rank


def payload_width(size: CountTable | int) -> PayloadWidth:
    """Payload bits per block for a language of the given size (or table)."""
    if isinstance(size, CountTable):
        size = cardinality(size)
    if size < 1:
        raise EmptyLanguage("the constrained language is empty")
    return PayloadWidth(size.bit_length() - 1, (size - 1).bit_length())


def check_recurrence(table: CountTable, aut: Automaton) -> list[tuple[int, int]]:
    """Return every ``(t, q)`` where the table breaks the defining recurrence."""
    bad = []
    if table.state_count != aut.state_count or len(table.layers) != table.n + 1:
        return [(-1, -1)]
    for q, acc in enumerate(aut.accepting):
        if table.layers[0][q] != int(acc):
            bad.append((0, q))
    rows = _live_rows(aut)
    for t in range(1, table.n + 1):
        prev, cur = table.layers[t - 1], table.layers[t]
        for q, row in enumerate(rows):
            if cur[q] != sum(prev[s] for s in row):
                bad.append((t, q))
    return bad


def serialize_table(table: CountTable) -> bytes:
    lines = [
        MAGIC,
        f"fingerprint {table.fingerprint}",
        f"n {table.n}",
        f"states {table.state_count}",
    ]
    lines.extend(" ".join(map(str, layer)) for layer in table.layers)
    return ("\n".join(lines) + "\n").encode()


def deserialize_table(
    data: bytes, fingerprint: str | None = None, aut: Automaton | None = None
) -> CountTable:
    """Parse a table file.

    With ``fingerprint`` the stored spec fingerprint must match; with ``aut``
    the counts are re-checked against the recurrence, which catches any
    edited digit.
    """
    try:
        lines = data.decode("utf-8").splitlines()
    except UnicodeDecodeError as exc:
        raise FormatError(f"table is not UTF-8: {exc}") from None
    if len(lines) < 4 or lines[0] != MAGIC:
        raise FormatError("missing 'CCTBL 1' header")
    try:
        key, stored = lines[1].split(" ", 1) if " " in lines[1] else (lines[1], "")
        if key != "fingerprint":
            raise ValueError("fingerprint line")
        key, n = lines[2].split()
        if key != "n":
            raise ValueError("n line")
        key, states = lines[3].split()
        if key != "states":
            raise ValueError("states line")
        n, states = int(n), int(states)
        layers = tuple(tuple(int(x) for x in line.split()) for line in lines[4:])
    except ValueError as exc:
        raise FormatError(f"malformed table header or counts: {exc}") from None
    if len(layers) != n + 1 or any(len(layer) != states for layer in layers):
        raise FormatError(f"expected {n + 1} layers of {states} counts")
    if any(c < 0 for layer in layers for c in layer):
        raise FormatError("negative count")
    if fingerprint is not None and stored != fingerprint:
        raise FingerprintMismatch(f"table built for spec {stored[:12]}, not {fingerprint[:12]}")
    table = CountTable(n, layers, stored)
    if aut is not None:
        bad = check_recurrence(table, aut)
        if bad:
            raise FormatError(f"counts break the recurrence at (t, state) {bad[0]}")
    return table
