"""How close the chain constructions get to the closed-form ceilings."""

import csv
import math
import sys

from outerkplanar import (
    NotApplicableError,
    bound_report,
    epsilon_for,
    general_lower,
    general_upper,
)

# the two headline quantities scale like sqrt(k)*n; compare their slopes
print("k      lower/(sqrt(k)n)   common/(sqrt(k)n)   direct/(sqrt(k)n)")
n = 3002
for k in (25, 100, 2500, 10**4, 10**6):
    root = math.sqrt(k) * n
    lo = general_lower(n, k).value / root
    common = general_upper(n, k, "common") / root
    try:
        direct = f"{general_upper(n, k, 'direct') / root:.4f}"
    except NotApplicableError:
        direct = "   n/a"
    print(f"{k:<7}{lo:<19.4f}{common:<20.4f}{direct}")

# epsilon_for drives the direct bound; it keeps shrinking
print("\nepsilon_for(k):")
for k in (50, 176, 1000, 10**4, 10**6):
    print(f"  k={k:<8} eps={epsilon_for(k):.6f}")

# full report for one (n, k), same rows the CLI prints
rep = bound_report(100, 2)
print("\nbound_report(100, 2):")
for e in rep.entries:
    val = "-" if e.value is None else f"{e.value:.1f}"
    print(f"  {e.name:<18} {e.kind:<6} {val:>8}  [{e.valid}] {e.source}")

# plot-ready rows, same shape as `outerkplanar sweep --format csv`
writer = csv.writer(sys.stdout, lineterminator="\n")
writer.writerow(["n", "k", "bound_name", "value", "valid"])
for nn in (50, 100):
    for e in bound_report(nn, 8).entries:
        writer.writerow([nn, 8, e.name,
                         "" if e.value is None else round(e.value, 2), e.valid])
