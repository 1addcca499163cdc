"""Independent ground truth for the automaton/counting/codec path.

Three families live here, none of which touches the automaton module:

* brute-force enumeration filtered by the plain constraint definitions;
* direct transcriptions of the four table-filling count procedures (running
  sum, sliding window, forbidden words, running sum with forbidden words),
  kept loop-for-loop with their padding letter, which is written ``None``;
* the binomial-coefficient rank of fixed-weight binary words.

They are slow on purpose and meant for tests and ``selftest`` only.
"""

from __future__ import annotations

from itertools import product
from math import comb

from .constraints import (
    ConstraintSpec,
    ForbiddenWordsSpec,
    RunningSumSpec,
    SlidingWindowSpec,
    SubblockWeightSpec,
)
from .errors import SpecError, TooLarge, WeightMismatch

MAX_CANDIDATES = 1 << 24
PAD = None  # the padding letter; weight 0, never part of a forbidden word

TrajectoryTable = list  # S[i] for i = 1..n-r+1 (list index i-1), each a dict keyed by j, u or (j, u)


# -- brute force -------------------------------------------------------------

def _contains(word, v) -> bool:
    lv = len(v)
    return any(tuple(word[i:i + lv]) == v for i in range(len(word) - lv + 1))


def satisfies(spec: ConstraintSpec, word) -> bool:
    """Check ``word`` against the plain definition of every constraint."""
    word = tuple(word)
    if any(a not in spec.alphabet.letters for a in word):
        return False
    n = len(word)
    for c in spec.constraints:
        if isinstance(c, RunningSumSpec):
            z = 0
            for a in word:
                z += a
                if not c.min_prefix <= z <= c.max_prefix:
                    return False
            if not c.min_final <= z <= c.max_final:
                return False
        elif isinstance(c, SlidingWindowSpec):
            for i in range(n - c.window + 1):
                if not c.min_weight <= sum(word[i:i + c.window]) <= c.max_weight:
                    return False
        elif isinstance(c, SubblockWeightSpec):
            if n % c.block:
                raise SpecError(f"length {n} is not a multiple of block {c.block}")
            for i in range(0, n, c.block):
                if not c.min_weight <= sum(word[i:i + c.block]) <= c.max_weight:
                    return False
        elif isinstance(c, ForbiddenWordsSpec):
            if any(_contains(word, v) for v in c.words):
                return False
        else:
            raise SpecError(f"unsupported constraint {c!r}")
    return True


def enumerate_language(spec: ConstraintSpec, n: int | None = None) -> list[tuple[int, ...]]:
    """All language words of length ``n`` in lexicographic (alphabet) order."""
    n = spec.length if n is None else n
    m = len(spec.alphabet)
    if m ** n > MAX_CANDIDATES:
        raise TooLarge(f"{m}^{n} candidates exceeds the brute-force guard of 2^24")
    # itertools.product yields in alphabet order already
    return [w for w in product(spec.alphabet.letters, repeat=n) if satisfies(spec, w)]


# -- running sum -------------------------------------------------------------

def _prefix_sums_ok(prefix, d1, d2) -> bool:
    z = 0
    for a in prefix:
        z += a
        if not d1 <= z <= d2:
            return False
    return True


def running_sum_trace(prefix, d1, d2, alpha, beta, n, alphabet) -> tuple[int, TrajectoryTable]:
    """Running-sum count N(prefix) together with its trajectory table.

    ``S[i-1][j]`` is the number of trajectories of ``i-1`` extra letters that
    start at the prefix sum and end at sum ``j``.
    """
    prefix = tuple(prefix)
    r = len(prefix)
    if not _prefix_sums_ok(prefix, d1, d2):
        return 0, []
    z_r = sum(prefix)
    if not d1 <= z_r <= d2:
        # empty prefix with 0 outside the band: N() is the sum of N(a)
        return sum(running_sum_table_count((a,), d1, d2, alpha, beta, n, alphabet) for a in alphabet), []
    S = [{j: 0 for j in range(d1, d2 + 1)} for _ in range(n - r + 1)]
    S[0][z_r] = 1
    for i in range(1, n - r + 1):
        for k in range(d1, d2 + 1):
            for a in alphabet:
                if d1 <= k + a <= d2:
                    S[i][k + a] += S[i - 1][k]
    N = 0
    for j in range(alpha, beta + 1):
        N += S[n - r][j]
    return N, S


def running_sum_table_count(prefix, d1, d2, alpha, beta, n, alphabet) -> int:
    return running_sum_trace(prefix, d1, d2, alpha, beta, n, alphabet)[0]


# -- sliding window over {0, 1} ----------------------------------------------

def _w(u) -> int:
    return sum(a for a in u if a is not PAD)


def _nu(u) -> int:
    return sum(1 for a in u if a is PAD)


def _padded(prefix, width: int) -> tuple:
    return (PAD,) * width + tuple(prefix)


def sliding_window_table_count(prefix, l, alpha, beta, n) -> int:
    """Sliding-window count on {0, 1}; exact whenever ``n >= l`` or the
    constraint is vacuous."""
    prefix = tuple(prefix)
    r = len(prefix)
    x = _padded(prefix, l)  # x[l + i - 1] holds x_i
    # a prefix counts 0 unless each of its windows passes the same guards as the loop
    for end in range(l, l + r):
        u = x[end - l + 1:end + 1]
        if not alpha - _nu(u) <= _w(u) <= beta:
            return 0
    cells = list(product((PAD, 0, 1), repeat=l))
    S = [{u: 0 for u in cells} for _ in range(n - r + 1)]
    S[0][x[len(x) - l:]] = 1
    for i in range(1, n - r + 1):
        for u in cells:
            if not S[i - 1][u]:
                continue
            v0 = u[1:] + (0,)
            v1 = u[1:] + (1,)
            if _w(v0) >= alpha - _nu(v0):
                S[i][v0] += S[i - 1][u]
            if _w(v1) <= beta:
                S[i][v1] += S[i - 1][u]
    # final layer is S[n-r+1]; when n < l the last window still holds padding
    finals = product((0, 1), repeat=l) if n >= l else cells
    N = 0
    for u in finals:
        N += S[n - r][u]
    return N


# -- forbidden words ---------------------------------------------------------

def forbidden_table_count(prefix, V, n, alphabet) -> int:
    prefix = tuple(prefix)
    V = [tuple(v) for v in V]
    r = len(prefix)
    if any(_contains(prefix, v) for v in V):
        return 0
    mu = max(len(v) for v in V)
    x = _padded(prefix, mu)
    extended = (PAD,) + tuple(alphabet)
    cells = list(product(extended, repeat=mu))
    S = [{u: 0 for u in cells} for _ in range(n - r + 1)]
    S[0][x[len(x) - mu:]] = 1
    for i in range(1, n - r + 1):
        for u in cells:
            if not S[i - 1][u]:
                continue
            for a in alphabet:  # real letters only; appending padding would count shorter words
                lam = True
                w = u[1:] + (a,)
                for v in V:
                    if w[mu - len(v):] == v:
                        lam = False
                if lam:
                    S[i][w] += S[i - 1][u]
    finals = product(tuple(alphabet), repeat=mu) if n >= mu else cells
    N = 0
    for u in finals:
        N += S[n - r][u]
    return N


# -- running sum with forbidden words ----------------------------------------

def combined_table_count(prefix, d1, d2, alpha, beta, V, n, alphabet) -> int:
    prefix = tuple(prefix)
    V = [tuple(v) for v in V]
    r = len(prefix)
    if not _prefix_sums_ok(prefix, d1, d2) or any(_contains(prefix, v) for v in V):
        return 0
    z_r = sum(prefix)
    if not d1 <= z_r <= d2:
        return sum(combined_table_count((a,), d1, d2, alpha, beta, V, n, alphabet) for a in alphabet)
    mu = max((len(v) for v in V), default=0)
    x = _padded(prefix, mu)
    extended = (PAD,) + tuple(alphabet)
    cells = list(product(extended, repeat=mu))
    S = [{(j, u): 0 for j in range(d1, d2 + 1) for u in cells} for _ in range(n - r + 1)]
    S[0][z_r, x[len(x) - mu:]] = 1
    for i in range(1, n - r + 1):
        for j in range(d1, d2 + 1):
            for u in cells:
                if not S[i - 1][j, u]:
                    continue
                for a in alphabet:
                    lam1 = d1 <= j + a <= d2
                    lam2 = True
                    w = u[1:] + (a,) if mu else ()
                    for v in V:
                        if w[mu - len(v):] == v:
                            lam2 = False
                    if lam1 and lam2:
                        S[i][j + a, w] += S[i - 1][j, u]
    finals = list(product(tuple(alphabet), repeat=mu)) if n >= mu else cells
    N = 0
    for j in range(alpha, beta + 1):
        for u in finals:
            N += S[n - r][j, u]
    return N


# -- fixed weight ------------------------------------------------------------

def binomial_rank(word, nu: int) -> int:
    """Lexicographic rank of a 0/1 word among words of weight ``nu``."""
    word = tuple(word)
    if any(a not in (0, 1) for a in word):
        raise WeightMismatch("binomial rank needs a 0/1 word")
    if sum(word) != nu:
        raise WeightMismatch(f"word has weight {sum(word)}, expected {nu}")
    n = len(word)
    code = 0
    ones = 0
    for k, a in enumerate(word, start=1):
        if a == 1:
            # words agreeing up to k-1 and then having 0 at position k
            rest = nu - ones
            if 0 <= rest <= n - k:
                code += comb(n - k, rest)
            ones += 1
    return code


def table_oracle_count(spec: ConstraintSpec, prefix, n: int | None = None) -> int | None:
    """Dispatch to the transcription that covers ``spec``, or ``None``.

    Covered: one running-sum constraint, one sliding-window constraint on
    {0, 1} (with ``n >= window``), one forbidden-words constraint, and a
    running-sum plus forbidden-words pair.
    """
    n = spec.length if n is None else n
    letters = spec.alphabet.letters
    cs = spec.constraints
    kinds = sorted(type(c).__name__ for c in cs)
    if kinds == ["RunningSumSpec"]:
        c = cs[0]
        return running_sum_table_count(prefix, c.min_prefix, c.max_prefix, c.min_final, c.max_final, n, letters)
    if kinds == ["SlidingWindowSpec"] and letters == (0, 1) and n >= cs[0].window:
        c = cs[0]
        return sliding_window_table_count(prefix, c.window, c.min_weight, c.max_weight, n)
    if kinds == ["ForbiddenWordsSpec"]:
        return forbidden_table_count(prefix, cs[0].words, n, letters)
    if kinds == ["ForbiddenWordsSpec", "RunningSumSpec"]:
        rs = next(c for c in cs if isinstance(c, RunningSumSpec))
        fw = next(c for c in cs if isinstance(c, ForbiddenWordsSpec))
        return combined_table_count(
            prefix, rs.min_prefix, rs.max_prefix, rs.min_final, rs.max_final, fw.words, n, letters
        )
    return None
