"""Declarative channel constraints and the JSON spec-file schema.

A spec names an ordered alphabet of integer letters, a codeword length and a
list of constraints; the constrained language is the set of length-``length``
words that satisfy every constraint at once.  The declared letter order is the
ranking order used by the codec.

Weights are sums of letter values, so weight-based constraints (sliding
window, subblock) need an alphabet of nonnegative letters.  On ``[0, 1]`` the
weight is the number of ones.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from typing import Union

from .errors import SpecError, UnknownLetter

Word = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def index(self, letter: int) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise UnknownLetter(f"letter {letter!r} is not in alphabet {list(self.letters)}") from None

    def indices(self, word) -> list[int]:
        return [self.index(a) for a in word]

    @property
    def nonnegative(self) -> bool:
        return all(a >= 0 for a in self.letters)


@dataclass(frozen=True)
class RunningSumSpec:
    """Every prefix sum lies in ``[min_prefix, max_prefix]`` and the total in
    ``[min_final, max_final]``.  Only nonempty prefixes are constrained."""

    min_prefix: int
    max_prefix: int
    min_final: int
    max_final: int

    type_name = "running_sum"


@dataclass(frozen=True)
class SlidingWindowSpec:
    """Every run of ``window`` consecutive letters has weight in
    ``[min_weight, max_weight]``; words shorter than the window are free."""

    window: int
    min_weight: int
    max_weight: int

    type_name = "sliding_window"


@dataclass(frozen=True)
class SubblockWeightSpec:
    """The word splits into consecutive blocks of ``block`` letters, each with
    weight in ``[min_weight, max_weight]``."""

    block: int
    min_weight: int
    max_weight: int

    type_name = "subblock"


@dataclass(frozen=True)
class ForbiddenWordsSpec:
    words: tuple[Word, ...]

    type_name = "forbidden_words"

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(tuple(w) for w in self.words))

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.words)

    @property
    def mu(self) -> int:
        return max(self.lengths, default=0)


Constraint = Union[RunningSumSpec, SlidingWindowSpec, SubblockWeightSpec, ForbiddenWordsSpec]

_CONSTRAINT_TYPES = {
    cls.type_name: cls
    for cls in (RunningSumSpec, SlidingWindowSpec, SubblockWeightSpec, ForbiddenWordsSpec)
}
_FIELDS = {
    "running_sum": ("min_prefix", "max_prefix", "min_final", "max_final"),
    "sliding_window": ("window", "min_weight", "max_weight"),
    "subblock": ("block", "min_weight", "max_weight"),
    "forbidden_words": ("words",),
}


@dataclass(frozen=True)
class ConstraintSpec:
    alphabet: Alphabet
    length: int
    constraints: tuple[Constraint, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.alphabet, Alphabet):
            object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        object.__setattr__(self, "constraints", tuple(self.constraints))

    def with_length(self, n: int) -> ConstraintSpec:
        return replace(self, length=n)

    def fingerprint(self) -> str:
        return hashlib.sha256(serialize_spec(self, indent=None).encode()).hexdigest()


# -- parsing -----------------------------------------------------------------

def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _int_field(obj: dict, key: str, where: str) -> int:
    if key not in obj:
        raise SpecError(f"{where}: missing field {key!r}")
    if not _is_int(obj[key]):
        raise SpecError(f"{where}.{key}: expected integer, got {obj[key]!r}")
    return obj[key]


def _check_keys(obj: dict, allowed, where: str) -> None:
    unknown = sorted(set(obj) - set(allowed))
    if unknown:
        raise SpecError(f"{where}: unknown field(s) {', '.join(map(repr, unknown))}")


def _parse_constraint(obj, where: str) -> Constraint:
    if not isinstance(obj, dict):
        raise SpecError(f"{where}: expected object, got {type(obj).__name__}")
    kind = obj.get("type")
    if kind not in _CONSTRAINT_TYPES:
        raise SpecError(f"{where}.type: unknown constraint type {kind!r}")
    names = _FIELDS[kind]
    _check_keys(obj, ("type",) + names, where)
    if kind == "forbidden_words":
        words = obj.get("words")
        if not isinstance(words, list):
            raise SpecError(f"{where}.words: expected list of letter lists")
        for i, w in enumerate(words):
            if not isinstance(w, list) or not all(_is_int(a) for a in w):
                raise SpecError(f"{where}.words[{i}]: expected list of integers, got {w!r}")
        return ForbiddenWordsSpec(tuple(tuple(w) for w in words))
    return _CONSTRAINT_TYPES[kind](*(_int_field(obj, k, where) for k in names))


def parse_spec(text: str) -> ConstraintSpec:
    """Parse spec-file JSON into a ConstraintSpec.

    Only the structure is checked here; call :func:`validate` for the
    semantic invariants.  Raises SpecError with a line/field location.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise SpecError("spec: top level must be a JSON object")
    _check_keys(obj, ("alphabet", "length", "constraints"), "spec")
    letters = obj.get("alphabet")
    if not isinstance(letters, list) or not all(_is_int(a) for a in letters):
        raise SpecError(f"alphabet: expected list of integers, got {letters!r}")
    length = _int_field(obj, "length", "spec")
    raw = obj.get("constraints", [])
    if not isinstance(raw, list):
        raise SpecError("constraints: expected list")
    constraints = tuple(_parse_constraint(c, f"constraints[{i}]") for i, c in enumerate(raw))
    return ConstraintSpec(Alphabet(tuple(letters)), length, constraints)


def load_spec(path) -> ConstraintSpec:
    with open(path, encoding="utf-8") as fh:
        return validate(parse_spec(fh.read()))


def spec_to_dict(spec: ConstraintSpec) -> dict:
    out = []
    for c in spec.constraints:
        d = {"type": c.type_name}
        if isinstance(c, ForbiddenWordsSpec):
            d["words"] = [list(w) for w in c.words]
        else:
            d.update({k: getattr(c, k) for k in _FIELDS[c.type_name]})
        out.append(d)
    return {"alphabet": list(spec.alphabet.letters), "length": spec.length, "constraints": out}


def serialize_spec(spec: ConstraintSpec, indent: int | None = 2) -> str:
    if indent is None:
        return json.dumps(spec_to_dict(spec), sort_keys=True, separators=(",", ":"))
    return json.dumps(spec_to_dict(spec), indent=indent)


# -- validation --------------------------------------------------------------

def _validate_constraint(c: Constraint, spec: ConstraintSpec, where: str) -> None:
    alphabet = spec.alphabet
    if isinstance(c, RunningSumSpec):
        if not (c.min_prefix <= c.min_final <= c.max_final <= c.max_prefix):
            raise SpecError(
                f"{where}: running_sum needs min_prefix <= min_final <= max_final <= max_prefix, "
                f"got {c.min_prefix}, {c.min_final}, {c.max_final}, {c.max_prefix}"
            )
    elif isinstance(c, SlidingWindowSpec):
        if not alphabet.nonnegative:
            raise SpecError(f"{where}: sliding_window weights need nonnegative letters")
        if c.window < 1:
            raise SpecError(f"{where}.window: must be positive, got {c.window}")
        top = c.window * max(alphabet.letters)
        if not (0 <= c.min_weight <= c.max_weight <= top):
            raise SpecError(
                f"{where}: sliding_window needs 0 <= min_weight <= max_weight <= {top}, "
                f"got {c.min_weight}, {c.max_weight}"
            )
    elif isinstance(c, SubblockWeightSpec):
        if not alphabet.nonnegative:
            raise SpecError(f"{where}: subblock weights need nonnegative letters")
        if c.block < 1:
            raise SpecError(f"{where}.block: must be positive, got {c.block}")
        if c.min_weight > c.max_weight:
            raise SpecError(f"{where}: subblock needs min_weight <= max_weight")
        if spec.length % c.block:
            raise SpecError(f"{where}: length {spec.length} is not a multiple of block {c.block}")
    elif isinstance(c, ForbiddenWordsSpec):
        if not c.words:
            raise SpecError(f"{where}.words: must be nonempty")
        if len(set(c.words)) != len(c.words):
            raise SpecError(f"{where}.words: duplicate forbidden word")
        for i, w in enumerate(c.words):
            if not w:
                raise SpecError(f"{where}.words[{i}]: forbidden word must be nonempty")
            bad = [a for a in w if a not in alphabet.letters]
            if bad:
                raise SpecError(f"{where}.words[{i}]: letter {bad[0]} not in alphabet")
    else:
        raise SpecError(f"{where}: unsupported constraint {c!r}")


def validate(spec: ConstraintSpec) -> ConstraintSpec:
    """Check every invariant of ``spec`` and return it unchanged."""
    letters = spec.alphabet.letters
    if not letters:
        raise SpecError("alphabet: must be nonempty")
    if len(set(letters)) != len(letters):
        raise SpecError("alphabet: letters must be distinct")
    if not _is_int(spec.length) or spec.length < 1:
        raise SpecError(f"length: must be a positive integer, got {spec.length!r}")
    for i, c in enumerate(spec.constraints):
        _validate_constraint(c, spec, f"constraints[{i}]")
    return spec
