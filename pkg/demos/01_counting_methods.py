# Five ways to count row-convex polyominoes by area, and how fast each one is.
import time

from rowconvex import (
    count_by_composition_sum,
    count_by_generating_function,
    count_by_linear_recurrence,
    count_by_partition_formula,
    count_by_transfer_dp,
)
from rowconvex.core import Partition, distinct_permutations, generate_partitions, permutation_factor
from rowconvex.enumeration import composition_weight

# A row-convex polyomino is a stack of rows. Its row lengths, read bottom to
# top, form a composition of the area. Rows of lengths a and b can touch in
# a + b - 1 horizontal positions, so each composition stands for a product of
# such factors.
for c in distinct_permutations(Partition((2, 1, 1))):
    print(c.parts, "->", composition_weight(c), "shapes")

# Grouping compositions by their sorted parts gives the partition formula.
n = 5
for p in generate_partitions(n):
    weights = [composition_weight(c) for c in distinct_permutations(p)]
    print(f"{str(p.parts):18} orderings={permutation_factor(p)}  weights={weights}")
print("S(5) =", count_by_partition_formula(5))

# Summing over all 2^(N-1) compositions directly gives the same numbers.
print([count_by_composition_sum(k) for k in range(1, 13)])

# Both are exponential. The transfer dynamic program is quadratic and the
# linear recurrence is linear, so N = 1000 is instant.
for name, fn in [("dp", count_by_transfer_dp), ("recurrence", count_by_linear_recurrence),
                 ("gf", count_by_generating_function)]:
    t = time.perf_counter()
    s = fn(1000)
    print(f"{name:10} S(1000) has {len(str(s[1000]))} digits  ({time.perf_counter() - t:.3f}s)")

t = time.perf_counter()
count_by_partition_formula(20)
print(f"partition formula at N=20: {time.perf_counter() - t:.2f}s")
