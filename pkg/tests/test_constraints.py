import json

import pytest
from hypothesis import given, settings

from constrained_codes import (
    Alphabet,
    ConstraintSpec,
    ForbiddenWordsSpec,
    RunningSumSpec,
    SlidingWindowSpec,
    SpecError,
    SubblockWeightSpec,
    compile_spec,
    parse_spec,
    serialize_spec,
    validate,
)
from constrained_codes.oracle import enumerate_language

from conftest import specs


def _doc(alphabet, length, constraints):
    return json.dumps({"alphabet": alphabet, "length": length, "constraints": constraints})


def test_parse_running_sum_example(lrs_spec):
    text = _doc([-1, 1], 6, [
        {"type": "running_sum", "min_prefix": 0, "max_prefix": 3, "min_final": 0, "max_final": 2}
    ])
    assert validate(parse_spec(text)) == lrs_spec


def test_parse_unconstrained():
    spec = validate(parse_spec(_doc([0, 1], 3, [])))
    assert spec.constraints == ()
    assert len(enumerate_language(spec)) == 8


def test_parse_forbidden_words(rll_spec):
    spec = parse_spec(_doc([0, 1], 3, [{"type": "forbidden_words", "words": [[0, 0], [1, 1, 1]]}]))
    assert spec == rll_spec
    assert spec.constraints[0].lengths == (2, 3)
    assert spec.constraints[0].mu == 3


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("{", "line 1"),
        ("[]", "top level"),
        (_doc([0, 1], 3, []).replace("}", ', "extra": 1}'), "unknown field"),
        (_doc([0, 1], 3, [{"type": "nope"}]), "constraints[0].type"),
        (_doc([0, 1], 3, [{"type": "subblock", "block": 2, "min_weight": 0}]), "max_weight"),
        (_doc([0, 1], 3, [{"type": "subblock", "block": 2, "min_weight": 0, "max_weight": 1, "x": 0}]),
         "unknown field"),
        (_doc([0, 1], 3, [{"type": "sliding_window", "window": "2", "min_weight": 0, "max_weight": 1}]),
         "constraints[0].window"),
        (_doc([0, 1], True, []), "length"),
        (_doc([0, "a"], 3, []), "alphabet"),
        (_doc([0, 1], 3, [{"type": "forbidden_words", "words": [[0, 0.5]]}]), "words[0]"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(SpecError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        parse_spec(text)


def test_validate_accepts_example(lrs_spec):
    assert validate(lrs_spec) is lrs_spec


@pytest.mark.parametrize(
    "spec",
    [
        ConstraintSpec(Alphabet((-1, 1)), 6, (RunningSumSpec(0, 3, 4, 5),)),
        ConstraintSpec(Alphabet((-1, 1)), 6, (SlidingWindowSpec(2, 1, 2),)),
        ConstraintSpec(Alphabet((0, 1)), 6, (SlidingWindowSpec(2, 0, 3),)),
        ConstraintSpec(Alphabet((0, 1)), 6, (SlidingWindowSpec(0, 0, 0),)),
        ConstraintSpec(Alphabet((0, 1)), 5, (SubblockWeightSpec(2, 0, 1),)),
        ConstraintSpec(Alphabet((0, 1)), 6, (SubblockWeightSpec(2, 2, 1),)),
        ConstraintSpec(Alphabet((0, 1)), 6, (ForbiddenWordsSpec(()),)),
        ConstraintSpec(Alphabet((0, 1)), 6, (ForbiddenWordsSpec(((0,), ())),)),
        ConstraintSpec(Alphabet((0, 1)), 6, (ForbiddenWordsSpec(((0, 2),)),)),
        ConstraintSpec(Alphabet((0, 1)), 6, (ForbiddenWordsSpec(((0, 1), (0, 1))),)),
        ConstraintSpec(Alphabet(()), 6, ()),
        ConstraintSpec(Alphabet((1, 1)), 6, ()),
        ConstraintSpec(Alphabet((0, 1)), 0, ()),
    ],
)
def test_validate_rejects(spec):
    with pytest.raises(SpecError):
        validate(spec)


def test_running_sum_band_may_exclude_start():
    # only nonempty prefixes are constrained, so the first letter must enter [1, 3]
    spec = validate(ConstraintSpec(Alphabet((0, 1)), 3, (RunningSumSpec(1, 3, 1, 3),)))
    assert enumerate_language(spec) == [(1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1)]


@settings(max_examples=200, deadline=None)
@given(specs())
def test_roundtrip_idempotent_and_compiles(spec):
    spec = validate(spec)
    assert parse_spec(serialize_spec(spec)) == spec
    assert parse_spec(serialize_spec(spec, indent=None)) == spec
    assert validate(validate(spec)) == spec
    compile_spec(spec)


def test_fingerprint_tracks_content(lrs_spec):
    assert lrs_spec.fingerprint() == parse_spec(serialize_spec(lrs_spec)).fingerprint()
    assert lrs_spec.fingerprint() != lrs_spec.with_length(8).fingerprint()
