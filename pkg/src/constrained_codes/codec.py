"""Enumerative (Cover) coding of constrained words.

The rank of a word is the number of language words that precede it in
lexicographic order, letters compared by their position in the alphabet.  It
is accumulated position by position from completion counts: at position
``i`` every letter ``a`` ordered before ``x_i`` contributes the number of
language words beginning ``x_1..x_{i-1} a``.  Unranking walks the same counts
in reverse.

Payload blocks of ``k = floor(log2 |S|)`` bits are read as big-endian
integers and unranked, so every block maps to a distinct codeword.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .automaton import Automaton, compile_spec
from .constraints import ConstraintSpec
from .counting import CountTable, build_count_table, cardinality, payload_width
from .errors import (
    EmptyLanguage,
    FingerprintMismatch,
    FormatError,
    LengthMismatch,
    NotInLanguage,
    RankOutOfRange,
    RankOverflow,
)

STREAM_MAGIC = b"CCF1"


def rank(table: CountTable, aut: Automaton, word) -> int:
    word = tuple(word)
    n = table.n
    if len(word) != n:
        raise NotInLanguage(f"word has length {len(word)}, codewords have length {n}")
    layers, trans = table.layers, aut.transitions
    q = aut.initial
    r = 0
    for i, b in enumerate(aut.alphabet.indices(word), start=1):
        row = trans[q]
        layer = layers[n - i]
        for a in range(b):
            t = row[a]
            if t is not None:
                r += layer[t]
        q = row[b]
        if q is None:
            raise NotInLanguage(f"word breaks a constraint at position {i}")
    if not aut.accepting[q]:
        raise NotInLanguage("word ends in a non-accepting state")
    return r


def unrank(table: CountTable, aut: Automaton, r: int) -> tuple[int, ...]:
    n = table.n
    size = table.layers[n][aut.initial]
    if not 0 <= r < size:
        raise RankOutOfRange(f"rank {r} outside [0, {size})")
    letters = aut.alphabet.letters
    layers, trans = table.layers, aut.transitions
    q = aut.initial
    word = []
    for i in range(1, n + 1):
        layer = layers[n - i]
        for a, t in enumerate(trans[q]):
            if t is None:
                continue
            c = layer[t]
            if r < c:
                word.append(letters[a])
                q = t
                break
            r -= c
        else:  # unreachable for a consistent table
            raise RankOutOfRange("rank exhausted before the word was complete")
    return tuple(word)


def encode_block(table: CountTable, aut: Automaton, payload: str) -> tuple[int, ...]:
    """Map a ``k``-bit string such as ``"101"`` to its codeword."""
    k = payload_width(table).k
    if len(payload) != k or set(payload) - {"0", "1"}:
        raise LengthMismatch(f"payload must be exactly {k} bits, got {payload!r}")
    return unrank(table, aut, int(payload, 2) if payload else 0)


def decode_block(table: CountTable, aut: Automaton, word) -> str:
    k = payload_width(table).k
    r = rank(table, aut, word)
    if r >> k:
        raise RankOverflow(f"rank {r} of this codeword is not below 2^{k}")
    return format(r, f"0{k}b") if k else ""


@dataclass(frozen=True, eq=False)
class Code:
    """A spec bundled with its automaton and count table."""

    spec: ConstraintSpec
    automaton: Automaton
    table: CountTable

    @classmethod
    def build(cls, spec: ConstraintSpec) -> Code:
        aut = compile_spec(spec)
        return cls(spec, aut, build_count_table(aut, spec.length, spec.fingerprint()))

    @cached_property
    def size(self) -> int:
        return cardinality(self.table, self.automaton)

    @property
    def k(self) -> int:
        return payload_width(self.table).k

    def rank(self, word) -> int:
        return rank(self.table, self.automaton, word)

    def unrank(self, r: int) -> tuple[int, ...]:
        return unrank(self.table, self.automaton, r)

    def encode_block(self, payload: str) -> tuple[int, ...]:
        return encode_block(self.table, self.automaton, payload)

    def decode_block(self, word) -> str:
        return decode_block(self.table, self.automaton, word)


def _code_for(spec: ConstraintSpec, code: Code | None) -> Code:
    if code is None:
        return Code.build(spec)
    if code.table.fingerprint != spec.fingerprint():
        raise FingerprintMismatch("count table was built for a different spec")
    return code


def encode_stream(spec: ConstraintSpec, payload: bytes, code: Code | None = None) -> bytes:
    """Pack ``payload`` into a CCF1 container of codewords.

    The payload bits are cut into ``k``-bit blocks, the last one zero-padded;
    each block becomes one codeword written as ``n`` bytes of letter indices.
    """
    code = _code_for(spec, code)
    k = code.k
    if k == 0 and payload:
        raise EmptyLanguage("language has a single word and carries no payload bits")
    if len(spec.alphabet) > 256:
        raise FormatError("containers store letter indices as single bytes (alphabet > 256)")
    nbits = 8 * len(payload)
    blocks = -(-nbits // k) if k else 0
    value = int.from_bytes(payload, "big") << (blocks * k - nbits)
    index = {a: i for i, a in enumerate(spec.alphabet.letters)}
    body = bytearray()
    mask = (1 << k) - 1
    for b in range(blocks):
        chunk = (value >> ((blocks - 1 - b) * k)) & mask
        body.extend(index[a] for a in code.unrank(chunk))
    header = (
        f"n={spec.length} k={k} blocks={blocks} payload_bits={nbits} "
        f"fingerprint={spec.fingerprint()}\n"
    )
    return STREAM_MAGIC + header.encode() + bytes(body)


def _parse_header(line: bytes) -> dict[str, str]:
    try:
        fields = dict(item.split("=", 1) for item in line.decode("utf-8").split())
    except (UnicodeDecodeError, ValueError):
        raise FormatError("malformed container header") from None
    if set(fields) != {"n", "k", "blocks", "payload_bits", "fingerprint"}:
        raise FormatError(f"container header fields {sorted(fields)}")
    return fields


def decode_stream(spec: ConstraintSpec, data: bytes, code: Code | None = None) -> bytes:
    if not data.startswith(STREAM_MAGIC):
        raise FormatError("missing CCF1 magic")
    end = data.find(b"\n", len(STREAM_MAGIC))
    if end < 0:
        raise FormatError("unterminated container header")
    fields = _parse_header(data[len(STREAM_MAGIC):end])
    if fields["fingerprint"] != spec.fingerprint():
        raise FingerprintMismatch("container was written for a different spec")
    try:
        n, k, blocks, nbits = (int(fields[f]) for f in ("n", "k", "blocks", "payload_bits"))
    except ValueError:
        raise FormatError("non-integer container header field") from None
    code = _code_for(spec, code)
    if n != spec.length or (blocks and k != code.k):
        raise FormatError(f"header n={n} k={k} does not match spec (n={spec.length})")
    if nbits < 0 or nbits % 8 or (k == 0 and nbits) or blocks != (-(-nbits // k) if k else 0):
        raise FormatError(f"payload_bits={nbits} inconsistent with blocks={blocks}")
    body = data[end + 1:]
    if len(body) != blocks * n:
        raise FormatError(f"expected {blocks * n} codeword bytes, found {len(body)}")
    letters = spec.alphabet.letters
    value = 0
    for b in range(blocks):
        raw = body[b * n:(b + 1) * n]
        if max(raw, default=0) >= len(letters):
            raise FormatError(f"block {b}: letter index out of range")
        r = code.rank(tuple(letters[i] for i in raw))
        if r >> k:
            raise RankOverflow(f"block {b}: rank {r} is not below 2^{k}")
        value = (value << k) | r
    pad = blocks * k - nbits
    if value & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    return (value >> pad).to_bytes(nbits // 8, "big")
