"""Enumerative coding for constrained sequences.

Compile running-sum, sliding-window, subblock-weight and forbidden-word
constraints into a finite automaton, count completions with exact integers,
and rank/unrank codewords.
"""

from .automaton import Automaton, compile_spec, product, step_word
from .codec import Code, decode_block, decode_stream, encode_block, encode_stream, rank, unrank
from .constraints import (
    Alphabet,
    ConstraintSpec,
    ForbiddenWordsSpec,
    RunningSumSpec,
    SlidingWindowSpec,
    SubblockWeightSpec,
    load_spec,
    parse_spec,
    serialize_spec,
    validate,
)
from .counting import (
    CountTable,
    build_count_table,
    cardinality,
    completions,
    deserialize_table,
    payload_width,
    prefix_count,
    serialize_table,
)
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
