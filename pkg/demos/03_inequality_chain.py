# Why h(n, 1) is the smallest breakpoint value, one step at a time.
#
# d(m) = h(n, m+1) - h(n, m) >= 0 is rewritten as a rectangle bound on an
# integral of g(t) = t^(n-m) (1-t)^(m-1). Where g peaks decides which
# integer inequality is needed.

from feige.lemmas import (
    b_value,
    case1_check,
    case2_check,
    d_value,
    g_argmax,
    g_interval,
    rectangle_bound_check,
    symmetry_check,
)

n = 9
print("d(m) for n = 9:", [str(d_value(n, m)) for m in range(1, n)])
print("symmetric d(m) = d(n-m):", symmetry_check(n).passed)

for m in range(1, n):
    lo, hi = g_interval(n, m)
    t = g_argmax(n, m)
    where = "right end" if t == hi else "interior"
    rect = rectangle_bound_check(n, m)
    print(f"m={m}: g peaks at {t} ({where}) on [{lo}, {hi}]; rectangle bound {rect.holds}")

# Case 1 (peak at the right end) reduces to w(m) >= w(n-m), i.e. m >= n/2.
print("case 1 holds for m =", [m for m in range(1, n) if case1_check(n, m).holds])

# Case 2 (interior peak, m >= (n+1)/2) needs (m+1)^m (n-1)^(n-1) >= m (m-1)^(m-1) (n+1)^(n-1).
# It holds precisely in that regime and fails below it.
print("case 2 holds for m =", [m for m in range(1, n) if case2_check(n, m).holds])

# b(m) = m (m-1)^(m-1) / (m+1)^m is decreasing, which pushes case 2 to n = 2m - 1
print("b(1..6) =", [str(b_value(m)) for m in range(1, 7)])
