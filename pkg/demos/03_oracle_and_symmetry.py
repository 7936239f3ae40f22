# Brute-force ground truth: grow every fixed polyomino and filter.
from rowconvex.analysis import reflection_bounds
from rowconvex.enumeration import count_by_transfer_dp
from rowconvex.oracle import (
    census,
    enumerate_fixed_polyominoes,
    is_hole_free,
    is_row_convex,
    reflect_vertical,
)

shapes = list(enumerate_fixed_polyominoes(4))
print(len(shapes), "fixed tetrominoes, all row-convex:", all(map(is_row_convex, shapes)))
print(shapes[5].to_text(), "\n")

# The smallest polyominoes with a hole have 7 cells.
holed = [p for p in enumerate_fixed_polyominoes(7) if not is_hole_free(p)]
print(len(holed), "heptominoes with a hole, e.g.")
print(holed[0].to_text(), "\n")

dp = count_by_transfer_dp(10)
print(" n  total  row-convex  S(n)  symmetric  up-to-mirror")
for n in range(1, 11):
    c = census(n)
    print(f"{n:2} {c.total:6} {c.row_convex:11} {dp[n]:5} {c.mirror_symmetric:10} {c.reflection_classes:13}")

# Each composition accounts for exactly prod(a + b - 1) shapes.
print(sorted(census(5).by_composition.items())[:6])

# Mirror images: bounds versus the exact count.
for n in (4, 8, 10):
    b = reflection_bounds(n)
    print(f"n={n}: {b.lower} <= {b.exact} <= {b.upper}")

p = shapes[7]
print(p.to_text(), "\nmirror:\n" + reflect_vertical(p).to_text())
