import pytest

from constrained_codes import Alphabet, ConstraintSpec, ForbiddenWordsSpec, RunningSumSpec, TooLarge
from constrained_codes.oracle import (
    WeightMismatch,
    binomial_rank,
    enumerate_language,
    running_sum_table_count,
    running_sum_trace,
    sliding_window_table_count,
    forbidden_table_count,
    combined_table_count,
)
from constrained_codes.selftest import check_spec

PM = (-1, 1)


def test_enumerate_examples(rll_spec, lrs_spec):
    assert enumerate_language(rll_spec) == [(0, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
    words = enumerate_language(lrs_spec)
    assert len(words) == 13 and words[0] == (1, -1, 1, -1, 1, -1)
    assert enumerate_language(ConstraintSpec(Alphabet((0, 1)), 2, ())) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_enumerate_guard():
    with pytest.raises(TooLarge):
        enumerate_language(ConstraintSpec(Alphabet((0, 1)), 25, ()))


def test_alg1_examples():
    n, S = running_sum_trace((1, -1, 1), 0, 3, 0, 2, 6, PM)
    assert n == 5
    assert [col for col in S][-1] == {0: 2, 1: 0, 2: 3, 3: 0}
    assert running_sum_table_count((), 0, 3, 0, 2, 6, PM) == 13
    assert running_sum_table_count((-1,), 0, 3, 0, 2, 6, PM) == 0


def test_alg1_start_outside_band():
    # 0 is not in [1, 3]; N() is assembled from the one-letter prefixes
    assert running_sum_table_count((), 1, 3, 1, 3, 3, (0, 1)) == 4


def test_alg2_examples():
    assert sliding_window_table_count((), 2, 1, 2, 3) == 5
    assert sliding_window_table_count((0, 0), 2, 1, 2, 5) == 0
    for n in range(1, 6):
        for r in range(n + 1):
            assert sliding_window_table_count((1,) * r, n + 1, 0, n + 1, n) == 2 ** (n - r)
            assert sliding_window_table_count((1,) * r, n, 0, n, n) == 2 ** (n - r)


def test_alg3_examples():
    assert forbidden_table_count((), [(0, 0), (1, 1, 1)], 3, (0, 1)) == 4
    assert forbidden_table_count((1, 0, 0), [(0, 0), (1, 1, 1)], 5, (0, 1)) == 0
    assert forbidden_table_count((), [(0,), (1,)], 4, (0, 1)) == 0


def test_alg4_examples():
    assert combined_table_count((), 0, 3, 0, 2, [(1, 1, 1)], 6, PM) == 9
    for pre in [(), (1,), (1, -1, 1), (1, 1, -1)]:
        assert combined_table_count(pre, 0, 3, 0, 2, [], 6, PM) == running_sum_table_count(pre, 0, 3, 0, 2, 6, PM)
    V = [(0, 0), (1, 1, 1)]
    for pre in [(), (0,), (0, 1), (1, 1)]:
        assert combined_table_count(pre, 0, 6, 0, 6, V, 6, (0, 1)) == forbidden_table_count(pre, V, 6, (0, 1))


def test_binomial_rank_examples():
    assert binomial_rank((0, 0, 1, 1), 2) == 0
    assert binomial_rank((1, 1, 0, 0), 2) == 5
    assert binomial_rank((1, 0, 0, 1), 2) == 3
    with pytest.raises(WeightMismatch):
        binomial_rank((1, 1, 1, 0), 2)


def test_subblock_is_not_a_running_sum_set():
    # per-block weights with resets: 0110 is a valid two-block word of weight 1 per block,
    # but its total weight 2 puts it outside a running-sum set with final sum exactly 1
    from constrained_codes import SubblockWeightSpec

    secc = ConstraintSpec(Alphabet((0, 1)), 4, (SubblockWeightSpec(2, 1, 1),))
    band = ConstraintSpec(Alphabet((0, 1)), 4, (RunningSumSpec(0, 2, 1, 1),))
    assert (0, 1, 1, 0) in enumerate_language(secc)
    assert (0, 1, 1, 0) not in enumerate_language(band)
    assert set(enumerate_language(secc)) != set(enumerate_language(band))


@pytest.mark.parametrize(
    "spec",
    [
        ConstraintSpec(Alphabet(PM), 8, (RunningSumSpec(0, 3, 0, 2), ForbiddenWordsSpec(((1, 1, 1),)))),
        ConstraintSpec(Alphabet((0, 1, 2)), 5, (RunningSumSpec(0, 5, 2, 4), ForbiddenWordsSpec(((2, 2), (1, 0, 1))))),
    ],
)
def test_check_spec_clean(spec):
    rep = check_spec(spec)
    assert rep.ok, rep.mismatches[:5]
    assert rep.table_checked == rep.checked
