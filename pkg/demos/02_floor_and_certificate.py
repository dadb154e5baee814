# Where the minimum sits, how it moves with n, and why it stays above 1/e.

from decimal import Decimal, getcontext
from fractions import Fraction

from feige import e_bracket, global_min, h_floor, h_value
from feige.minimizer import certify_above_1_over_e, floor_monotone_check

# Breakpoint values h(n, m) for n = 4, on the integer scale H(n, m) / 5^4
print("n = 4:", [h_value(4, m).unnormalized for m in range(1, 5)], "/ 625")

# The scan over breakpoints always lands on m = 1, i.e. p = 1/(n+1)
for n in (1, 2, 5, 10, 50):
    r = global_min(n)
    print(f"n={n:3d}  argmin p = {r.argmin_p}  min = {float(r.min_value):.6f}")

# h(n, 1) = (n/(n+1))^n decreases in n ...
rep = floor_monotone_check(200)
print(f"floor decreasing for n < 200: {rep.passed} ({rep.checks_run} comparisons)")

# ... toward 1/e, but never reaches it. The certificate compares
# (1 + 1/n)^n with a rational lower bound on e; no floating point involved.
getcontext().prec = 30
br = e_bracket(25)
lo = Decimal(br.lower.numerator) / br.lower.denominator
hi = Decimal(br.upper.numerator) / br.upper.denominator
print(f"e in ({lo}, {hi})")
for n in (10, 1000, 10**5):
    gap = float(h_floor(n)) - 1 / 2.718281828459045
    print(f"n={n:>6}  certified > 1/e: {certify_above_1_over_e(n, 25)}  (float gap {gap:.3e})")

# Fewer terms can be inconclusive: 5/2 is below (7/6)^6
print("n=6 with 2 terms:", certify_above_1_over_e(6, 2), "| with 4 terms:", certify_above_1_over_e(6, 4))
print("(7/6)^6 > 5/2:", Fraction(7, 6) ** 6 > e_bracket(2).lower)
