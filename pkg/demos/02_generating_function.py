# The rational generating function, its recurrence, and the transfer series behind it.
from rowconvex.genfunc import (
    ONE,
    ROW_CONVEX_DENOMINATOR,
    ROW_CONVEX_GF,
    X,
    recurrence_from_gf,
    series_expand,
    verify_transfer_identities,
)

print("G(x) =", f"({ROW_CONVEX_GF.numerator}) / ({ROW_CONVEX_DENOMINATOR})")
print(series_expand(ROW_CONVEX_GF, 15).coefficients)

# The denominator falls out of collecting S over a common denominator:
print((1 - 2 * X) * (ONE - X) ** 2 - X * (1 - 2 * X + 2 * X * X))

# Reading the recurrence off the denominator:
rec = recurrence_from_gf(ROW_CONVEX_GF)
print("S(N) =", " + ".join(f"({a})*S(N-{k})" for k, a in enumerate(rec.coefficients, 1)),
      "from seeds", rec.initial_terms)

# F_m(x) counts compositions ending in a part m. Build it term by term from
# its defining recurrence and check every step of the derivation.
rep = verify_transfer_identities(30)
print(rep.checks)
for m in range(1, 5):
    print(f"F_{m}:", rep.F[m].coefficients[:10])
