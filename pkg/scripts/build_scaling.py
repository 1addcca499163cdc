"""Count-table build time and memory against codeword length for a
running-sum band of width 64.  Usage: python scripts/build_scaling.py [max_n]"""
import math
import sys
import time
import tracemalloc

from constrained_codes import Alphabet, ConstraintSpec, RunningSumSpec, build_count_table, compile_spec

top = int(sys.argv[1]) if len(sys.argv) > 1 else 8192
n = 256
rows = []
while n <= top:
    aut = compile_spec(ConstraintSpec(Alphabet((-1, 1)), n, (RunningSumSpec(-32, 32, -32, 32),)))
    t0 = time.perf_counter()
    table = build_count_table(aut, n)
    dt = time.perf_counter() - t0
    tracemalloc.start()
    build_count_table(aut, n)
    peak = tracemalloc.get_traced_memory()[1]
    tracemalloc.stop()
    rows.append((n, dt))
    print(f"n={n:6d}  build {dt:7.3f}s  peak {peak / 2**20:8.1f} MiB  |S| bits {table.layers[n][0].bit_length()}")
    n *= 2
if len(rows) > 1:
    (n0, t0), (n1, t1) = rows[0], rows[-1]
    print(f"growth exponent ~ {math.log(t1 / t0) / math.log(n1 / n0):.2f}")
