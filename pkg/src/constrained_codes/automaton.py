"""Compile constraints into deterministic finite-state automata.

Every constraint becomes an automaton over letter indices with a partial
transition function (``None`` marks the dead state) and an accept flag per
state.  The constrained language of length ``n`` is the set of words whose run
from the initial state never dies and ends in an accepting state.  Automata
are explored breadth-first from the initial state, so only reachable states
exist and state ids are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable

from .constraints import (
    Alphabet,
    ConstraintSpec,
    ForbiddenWordsSpec,
    RunningSumSpec,
    SlidingWindowSpec,
    SubblockWeightSpec,
    validate,
)
from .errors import AlphabetMismatch, SpecError


@dataclass(frozen=True, eq=False)
class Automaton:
    alphabet: Alphabet
    initial: int
    transitions: tuple[tuple[int | None, ...], ...]
    accepting: tuple[bool, ...]
    labels: tuple

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    def step(self, state: int, letter_index: int) -> int | None:
        return self.transitions[state][letter_index]

    def accept(self, state: int) -> bool:
        return self.accepting[state]

    def dump(self) -> str:
        """One line per state: id, label, accept flag, then ``letter→target``."""
        lines = []
        for q, row in enumerate(self.transitions):
            moves = " ".join(
                f"{a}→{'⊥' if t is None else t}" for a, t in zip(self.alphabet.letters, row)
            )
            lines.append(f"{q}\t{self.labels[q]}\t{int(self.accepting[q])}\t{moves}")
        return "\n".join(lines)


def explore(
    alphabet: Alphabet,
    start: Hashable,
    step: Callable[[Hashable, int], Hashable | None],
    accept: Callable[[Hashable], bool],
    label: Callable[[Hashable], object] = lambda key: key,
) -> Automaton:
    """Build the reachable part of an automaton given on abstract keys.

    ``step(key, letter_index)`` returns the successor key or ``None`` for dead.
    """
    ids = {start: 0}
    keys = [start]
    rows = []
    queue = deque([start])
    while queue:
        key = queue.popleft()
        row = []
        for a in range(len(alphabet)):
            nxt = step(key, a)
            if nxt is None:
                row.append(None)
                continue
            if nxt not in ids:
                ids[nxt] = len(keys)
                keys.append(nxt)
                queue.append(nxt)
            row.append(ids[nxt])
        rows.append(tuple(row))
    return Automaton(
        alphabet=alphabet,
        initial=0,
        transitions=tuple(rows),
        accepting=tuple(bool(accept(k)) for k in keys),
        labels=tuple(label(k) for k in keys),
    )


def unconstrained(alphabet: Alphabet) -> Automaton:
    return Automaton(alphabet, 0, (tuple(0 for _ in alphabet.letters),), (True,), ("free",))


def running_sum_automaton(alphabet: Alphabet, c: RunningSumSpec) -> Automaton:
    # state = current sum; the start sum 0 may lie outside the band
    letters = alphabet.letters

    def step(z, a):
        z2 = z + letters[a]
        return z2 if c.min_prefix <= z2 <= c.max_prefix else None

    return explore(alphabet, 0, step, lambda z: c.min_final <= z <= c.max_final)


def sliding_window_automaton(alphabet: Alphabet, c: SlidingWindowSpec) -> Automaton:
    # state = the most recent min(len, window-1) letter indices
    letters = alphabet.letters
    keep = c.window - 1

    def step(recent, a):
        if len(recent) < keep:
            return recent + (a,)
        w = sum(letters[i] for i in recent) + letters[a]
        if not c.min_weight <= w <= c.max_weight:
            return None
        return (recent + (a,))[1:] if keep else ()

    return explore(
        alphabet, (), step, lambda _: True, lambda key: tuple(letters[i] for i in key)
    )


def subblock_automaton(alphabet: Alphabet, c: SubblockWeightSpec) -> Automaton:
    # state = (position within block, weight so far); weights only grow
    letters = alphabet.letters

    def step(key, a):
        pos, w = key
        w += letters[a]
        if w > c.max_weight:
            return None
        if pos + 1 == c.block:
            return (0, 0) if w >= c.min_weight else None
        return (pos + 1, w)

    return explore(alphabet, (0, 0), step, lambda key: key[0] == 0)


def forbidden_words_automaton(alphabet: Alphabet, c: ForbiddenWordsSpec) -> Automaton:
    """Suffix automaton: the state is the longest suffix of the input read so
    far that is a proper prefix of some forbidden word."""
    forbidden = [tuple(alphabet.indices(v)) for v in c.words]
    prefixes = {v[:k] for v in forbidden for k in range(len(v))}

    def step(suffix, a):
        s = suffix + (a,)
        for v in forbidden:
            if len(v) <= len(s) and s[len(s) - len(v):] == v:
                return None
        for k in range(len(s) + 1):
            if s[k:] in prefixes:
                return s[k:]
        return ()

    letters = alphabet.letters
    return explore(
        alphabet, (), step, lambda _: True, lambda key: tuple(letters[i] for i in key)
    )


def product(*automata: Automaton) -> Automaton:
    """Reachable product; the language is the intersection of the inputs'."""
    if not automata:
        raise ValueError("product of no automata")
    alphabet = automata[0].alphabet
    for other in automata[1:]:
        if other.alphabet != alphabet:
            raise AlphabetMismatch(
                f"alphabets differ: {list(alphabet.letters)} vs {list(other.alphabet.letters)}"
            )
    if len(automata) == 1:
        return automata[0]

    def step(key, a):
        out = []
        for aut, q in zip(automata, key):
            t = aut.transitions[q][a]
            if t is None:
                return None
            out.append(t)
        return tuple(out)

    return explore(
        alphabet,
        tuple(aut.initial for aut in automata),
        step,
        lambda key: all(aut.accepting[q] for aut, q in zip(automata, key)),
        lambda key: tuple(aut.labels[q] for aut, q in zip(automata, key)),
    )


def compile_constraint(alphabet: Alphabet, c) -> Automaton:
    if isinstance(c, RunningSumSpec):
        return running_sum_automaton(alphabet, c)
    if isinstance(c, SlidingWindowSpec):
        return sliding_window_automaton(alphabet, c)
    if isinstance(c, SubblockWeightSpec):
        return subblock_automaton(alphabet, c)
    if isinstance(c, ForbiddenWordsSpec):
        return forbidden_words_automaton(alphabet, c)
    raise SpecError(f"unsupported constraint {c!r}")


def compile_spec(spec: ConstraintSpec) -> Automaton:
    """Compile a spec into one automaton accepting exactly its language."""
    validate(spec)
    for c in spec.constraints:
        if isinstance(c, SubblockWeightSpec) and spec.length % c.block:
            raise SpecError(f"length {spec.length} is not a multiple of block {c.block}")
    parts = [compile_constraint(spec.alphabet, c) for c in spec.constraints]
    if not parts:
        return unconstrained(spec.alphabet)
    return product(*parts)


def step_word(aut: Automaton, prefix) -> int | None:
    """Run ``prefix`` (letter values) from the initial state; ``None`` if it dies."""
    q = aut.initial
    for a in aut.alphabet.indices(prefix):
        q = aut.transitions[q][a]
        if q is None:
            return None
    return q
