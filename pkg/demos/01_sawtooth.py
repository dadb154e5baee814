# The sawtooth f(p) = P(S_n < n + 1) for n i.i.d. two-point variables.
#
# Each X_i is 1/p with probability p and 0 otherwise, so E[X_i] = 1.
# f is evaluated exactly; floats are only for display.

import sys
from fractions import Fraction

from feige import IidTwoPointInstance, breakpoints, f_of_p, sweep
from feige.report import write_sweep_csv

n = 10

# A few values by hand. f(1/11) is the single term (10/11)^10.
for p in (Fraction(1, 11), Fraction(1, 10), Fraction(1, 2)):
    v = f_of_p(IidTwoPointInstance(n, p))
    print(f"f({p}) = {v}  ~ {float(v):.6f}")

# The number of summands changes where (n+1)p is an integer
print("breakpoints:", [str(b) for b in breakpoints(n)])

# Exact sweep on j/1001 plus the breakpoints (1001 = 7*11*13, so they coincide)
recs = sweep(n, 1000)
jumps = [recs[i].p for i in range(len(recs) - 1) if recs[i + 1].f_value > recs[i].f_value]
print(f"{len(recs)} points, upward jumps right after p =", ", ".join(str(p) for p in jumps))

best = min(recs, key=lambda r: r.f_value)
print(f"smallest value {best.f_value} ~ {best.f_float:.6f} at p = {best.p}")

out = sys.argv[1] if len(sys.argv) > 1 else "sawtooth_n10.csv"
write_sweep_csv(recs, out)
print("wrote", out)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, ax = plt.subplots(figsize=(6, 3.5))
# break the line at each jump so the teeth are visible
seg_p, seg_f = [], []
for r in recs:
    seg_p.append(r.p_float)
    seg_f.append(r.f_float)
    if r.is_breakpoint:
        ax.plot(seg_p, seg_f, color="C0")
        seg_p, seg_f = [], []
ax.plot(seg_p, seg_f, color="C0")
ax.axhline(1 / 2.718281828459045, ls="--", color="gray", lw=0.8)
ax.set_xlabel("p")
ax.set_ylabel("P(S_n < n+1)")
ax.set_title(f"n = {n}")
fig.tight_layout()
fig.savefig(out.replace(".csv", ".png"), dpi=120)
