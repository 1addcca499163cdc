"""Trace the running-sum count for A={-1,+1}, n=6, sums in [0,3], total in [0,2].

Prints the trajectory columns for the prefix (+1,-1,+1), then every codeword
with its rank and the 3-bit payload it carries.
"""
from constrained_codes import Alphabet, Code, ConstraintSpec, RunningSumSpec
from constrained_codes.oracle import running_sum_trace

spec = ConstraintSpec(Alphabet((-1, 1)), 6, (RunningSumSpec(0, 3, 0, 2),))
N, S = running_sum_trace((1, -1, 1), 0, 3, 0, 2, 6, (-1, 1))
print("columns (sum 3 at top):")
for i, col in enumerate(S, start=1):
    print(f"  S[{i}] = {[col[j] for j in (3, 2, 1, 0)]}")
print(f"N(+1,-1,+1) = {N}")

code = Code.build(spec)
print(f"|S| = {code.size}, payload bits per block k = {code.k}")
for r in range(code.size):
    w = code.unrank(r)
    payload = format(r, f"0{code.k}b") if r < 2 ** code.k else "-"
    print(f"  {r:2d}  {' '.join(f'{a:+d}' for a in w)}  {payload}")
