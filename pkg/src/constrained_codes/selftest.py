"""Cross-check the automaton/counting/codec path against the oracles."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .automaton import compile_spec
from .codec import rank, unrank
from .constraints import (
    Alphabet,
    ConstraintSpec,
    ForbiddenWordsSpec as FW,
    RunningSumSpec as RS,
    SlidingWindowSpec as SW,
    SubblockWeightSpec as SB,
)
from .counting import build_count_table, prefix_count
from .oracle import enumerate_language, table_oracle_count

B = Alphabet((0, 1))
PM = Alphabet((-1, 1))
TERNARY = Alphabet((0, 1, 2))

# name -> (alphabet, constraints); lengths are chosen per spec by lengths_for()
GRID: dict[str, tuple[Alphabet, tuple]] = {
    "lrs_0_3_0_2": (PM, (RS(0, 3, 0, 2),)),
    "lrs_tight": (PM, (RS(-1, 1, -1, 1),)),
    "balanced_band2": (PM, (RS(-2, 2, 0, 0),)),
    "fixed_weight_3": (B, (RS(0, 10, 3, 3),)),
    "lrs_start_outside": (B, (RS(1, 6, 2, 5),)),
    "rs_signed_ternary": (Alphabet((-1, 0, 1)), (RS(-1, 2, 0, 1),)),
    "rs_ternary": (TERNARY, (RS(0, 8, 2, 5),)),
    "swcc_2_1_2": (B, (SW(2, 1, 2),)),
    "swcc_3_1_2": (B, (SW(3, 1, 2),)),
    "swcc_3_2_3": (B, (SW(3, 2, 3),)),
    "swcc_4_1_3": (B, (SW(4, 1, 3),)),
    "swcc_ternary": (TERNARY, (SW(2, 1, 3),)),
    "secc_2_1_1": (B, (SB(2, 1, 1),)),
    "secc_3_1_2": (B, (SB(3, 1, 2),)),
    "secc_ternary": (TERNARY, (SB(2, 1, 3),)),
    "rll_00_111": (B, (FW(((0, 0), (1, 1, 1))),)),
    "rll_0011_01010": (B, (FW(((0, 0, 1, 1), (0, 1, 0, 1, 0))),)),
    "rll_ternary": (TERNARY, (FW(((0, 0), (1, 2), (2, 1, 0))),)),
    "rll_no_ones": (B, (FW(((1,),)),)),
    "rll_empty": (B, (FW(((0,), (1,))),)),
    "lrs_and_rll": (PM, (RS(0, 3, 0, 2), FW(((1, 1, 1),)))),
    "lrs_and_rll_2": (PM, (RS(-2, 2, -1, 1), FW(((-1, -1), (1, -1, 1))))),
    "swcc_and_rll": (B, (SW(3, 1, 2), FW(((1, 0, 1),)))),
    "secc_and_rs": (B, (SB(2, 0, 1), RS(0, 4, 1, 3))),
    "rs_sw_rll": (B, (RS(0, 6, 2, 4), SW(3, 1, 2), FW(((1, 0, 1),)))),
    "free_ternary": (TERNARY, ()),
}


def lengths_for(alphabet: Alphabet, constraints, max_n: int, max_words: int = 1024) -> list[int]:
    """Lengths 1..max_n that respect block sizes and keep |A|^n <= max_words."""
    top = min(max_n, int(math.log(max_words, len(alphabet)) + 1e-9)) if len(alphabet) > 1 else max_n
    step = math.lcm(*(c.block for c in constraints if isinstance(c, SB))) if any(
        isinstance(c, SB) for c in constraints
    ) else 1
    return [n for n in range(step, top + 1, step)]


def grid_specs(max_n: int = 10, max_words: int = 1024):
    for name, (alphabet, constraints) in GRID.items():
        for n in lengths_for(alphabet, constraints, max_n, max_words):
            yield name, ConstraintSpec(alphabet, n, constraints)


@dataclass
class Report:
    checked: int = 0
    table_checked: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def merge(self, other: Report) -> None:
        self.checked += other.checked
        self.table_checked += other.table_checked
        self.mismatches.extend(other.mismatches)


def check_spec(spec: ConstraintSpec, name: str = "", tables: bool = True) -> Report:
    """Compare every prefix count, rank and unrank against brute force, and
    prefix counts against the table transcriptions where one applies."""
    rep = Report()
    n = spec.length
    aut = compile_spec(spec)
    table = build_count_table(aut, n)
    words = enumerate_language(spec)
    truth = Counter(w[:r] for w in words for r in range(n + 1))
    tag = name or repr(spec)
    for r in range(n + 1):
        for pre in product(spec.alphabet.letters, repeat=r):
            got = prefix_count(table, aut, pre)
            rep.checked += 1
            if got != truth[pre]:
                rep.mismatches.append(f"{tag} n={n} N{pre}: counted {got}, brute force {truth[pre]}")
            if tables:
                lit = table_oracle_count(spec, pre)
                if lit is not None:
                    rep.table_checked += 1
                    if lit != got:
                        rep.mismatches.append(f"{tag} n={n} N{pre}: counted {got}, table oracle {lit}")
    for i, w in enumerate(words):
        if rank(table, aut, w) != i or unrank(table, aut, i) != w:
            rep.mismatches.append(f"{tag} n={n}: rank/unrank disagree at index {i} word {w}")
    return rep


def run_grid(max_n: int = 10, max_words: int = 1024, tables: bool = True) -> Report:
    total = Report()
    for name, spec in grid_specs(max_n, max_words):
        total.merge(check_spec(spec, name, tables))
    return total
