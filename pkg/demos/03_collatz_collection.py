"""A canonical collection whose dynamics encode the Collatz map.

Every integer in a window reaches zero, and the diagnostics show the
three phases: negatives climb, large positives shrink, and small values
get absorbed.
"""

from collections import Counter

from addsys import build_collatz, collatz_map, collatz_seed, diagnose, probe_window, trajectory

spec = build_collatz()
print("first bases:", [spec.base(i) for i in range(4)])

rep = probe_window(spec, -1000, 1000, 200)
print(f"window [-1000, 1000]: {rep.resolved}/{rep.total} reach zero, deepest at {max(rep.zeroed_at.values())}")

trace = diagnose(spec, -700, 200)
print("\nphases for -700:")
for step in trace.steps[:6]:
    print(f"  step {step.index:>2}  value {step.value:>6}  base {step.base:>6}  {step.phase.value}")
print(f"  ... {len(trace.steps) - 6} more captured steps follow the Collatz orbit down to zero")

phases = Counter(s.phase.value for n in range(-200, 201) for s in diagnose(spec, n, 200).steps)
print("\nphase counts over [-200, 200]:", dict(phases))

n = 27
orbit = [n]
while orbit[-1] != 1:
    orbit.append(collatz_map(orbit[-1]))
seeded = trajectory(spec, collatz_seed(n), 400).values
print(f"\nseeded trajectory for {n} passes through it: {n in seeded}; Collatz orbit length {len(orbit)}")
