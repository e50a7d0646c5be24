"""
Sweeping the identities
=======================

Each identity check returns a report holding both sides.  The left side
comes from the recurrence and the right side from Binet-side constants, so
a match is real evidence rather than a tautology.
"""

from collections import Counter

from biperiodic import Params, catalan_oct, catalan_quat, norm_formula
from biperiodic.suite import SweepConfig, catalan_oct_parity_map, default_grid, gating_failures, run_grid

p = Params(2, 3, 1, 1)
rep = catalan_quat(7, 4, p)
print(rep.name, rep.indices, "equal =", rep.equal)
print("  lhs =", rep.lhs)

print(norm_formula(0, Params(1, 1, 0, 1)).to_json())

# the octonion Catalan statement with odd r only holds when a = b
for a, b in [(1, 1), (2, 1)]:
    r3 = catalan_oct(6, 3, Params(a, b, 0, 1))
    print(f"a={a}, b={b}, r=3:", r3.equal, "|", r3.note)

# a smaller version of what `biperiodic verify` runs
grid = default_grid()[:8]
reports = run_grid(grid, SweepConfig(n_max=10), workers=1)
print("\nchecks:", len(reports), " gating failures:", len(gating_failures(reports)))
print(Counter(r.name for r in reports).most_common(5))
print(catalan_oct_parity_map(reports))
