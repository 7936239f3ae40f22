# Where the growth comes from: the smallest root of 1 - 5x + 7x^2 - 4x^3.
from rowconvex.analysis import asymptotic_report, growth_ratio_estimate, residue_constants
from rowconvex.enumeration import count_by_linear_recurrence

rep = asymptotic_report(n_terms=500, digits=20)
print(rep.to_text(digits=15))

# The leading term C * growth^N from the residue at the real pole
rc = residue_constants()
s = count_by_linear_recurrence(300)
for N in (10, 50, 100, 300):
    print(N, f"relative error {abs(s[N] - rc.predict(N)) / s[N]:.2e}")

print(growth_ratio_estimate(1000, digits=50))
