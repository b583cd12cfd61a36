"""Positional numeral systems seen as canonical collections.

Decimal only reaches the non-negative integers. Balanced ternary and
negabinary reach every integer, and their expansions are exact sums.
"""

from addsys import balanced_ternary, decimal, expand, negabinary, probe_window

for name, spec, n in [("decimal", decimal(), 538), ("balanced ternary", balanced_ternary(), -35), ("negabinary", negabinary(), 6)]:
    e = expand(spec, n)
    print(f"{name:>17}: {n} = {e}  (depth {e.depth})")

print()
print("decimal cannot finish a negative number:")
e = expand(decimal(), -7, max_depth=12)
print(f"  -7 -> status {e.status}, remainder {e.remainder_at(e.depth)}")

print()
for name, spec in [("balanced ternary", balanced_ternary()), ("negabinary", negabinary())]:
    rep = probe_window(spec, -1000, 1000, 30)
    print(f"{name}: {rep.resolved}/{rep.total} integers in [-1000, 1000] expanded within depth 30")
