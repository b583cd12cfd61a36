"""Fractran programs and the canonical collections built from them."""

from addsys import build_fractran_type, diagnose, fractran_seed, parse, probe_window, run, trajectory

adder = parse("33/20 5/11 13/10 1/5 2/3 10/7 7/2")
values, halted = run(adder, 8)
print("from 8:", " ".join(map(str, values)), "| halted:", halted)
for n in range(6):
    out, _ = run(adder, 2**n, 100_000)
    print(f"  2^{n} ends at {out[-1]} = 13^{bin(n).count('1')}")

halving = build_fractran_type(parse("1/2"))
rep = probe_window(halving, -500, 500, 120)
print(f"\nprogram 1/2 (base {halving.b}): {rep.resolved}/{rep.total} resolved")

doubling = build_fractran_type(parse("2/1"))
rec = trajectory(doubling, 5, 60)
print(f"program 2/1 from 5: captured at step {rec.captured_at}, status {rec.status}")
print("  tail:", rec.values[-6:])

seed = fractran_seed(halving, 12)
trace = diagnose(halving, seed, 120)
print(f"\nseed for 12 under 1/2: {seed}; visits 12: {12 in trace.trajectory.values}; exceptional hits: {len(trace.exceptional_hits)}")
