"""Four constraints at once on 0/1 words, via the remap x -> 2x - 1.

  density of ones >= 1/2, total ones <= floor(2n/3),
  |ones in first k letters - k/2| <= bound for every k,
  no 0011 and no 01010.

Usage: python scripts/combined_constraints.py [n] [bound]
"""
import sys
import time

from constrained_codes import Alphabet, Code, ConstraintSpec, ForbiddenWordsSpec, RunningSumSpec

n = int(sys.argv[1]) if len(sys.argv) > 1 else 256
bound = int(sys.argv[2]) if len(sys.argv) > 2 else 20

spec = ConstraintSpec(
    Alphabet((-1, 1)),
    n,
    (
        # the total bound only matters when it is tighter than the band
        RunningSumSpec(-2 * bound, 2 * bound, 0, min(2 * bound, 2 * ((2 * n) // 3) - n)),
        ForbiddenWordsSpec(((-1, -1, 1, 1), (-1, 1, -1, 1, -1))),
    ),
)
t0 = time.perf_counter()
code = Code.build(spec)
elapsed = time.perf_counter() - t0
print(f"n={n} bound={bound}: {code.automaton.state_count} states, built in {elapsed:.2f}s")
print(f"|S| has {code.size.bit_length()} bits; k = {code.k} payload bits per block, rate {code.k / n:.4f}")
word = code.encode_block("1" * code.k)
print("codeword for all-ones payload:", "".join("1" if a > 0 else "0" for a in word))
