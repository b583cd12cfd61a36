"""Finite sumsets: directness, contraction, and factoring into mixed radix levels."""

from addsys import FiniteCollection, british_prefix, contract, debruijn_factor, sumset, tiles_mod

levels = british_prefix([2, 4, 3])
print("mixed radix levels:", levels.to_lists())
res = sumset(levels)
print("direct:", res.is_direct, "| sums:", len(res.sum), "| interval:", res.sum.is_interval())

merged = contract(levels, [0, 2])
print("merge levels 0 and 2:", merged.to_lists())
print("same sumset after merging:", sumset(merged).sum == res.sum)

fac = debruijn_factor(merged)
print("recovered bases:", fac.bases, "grouping:", fac.grouping)

clash = FiniteCollection([[0, 1, 2], [0, 1]])
print("\n[0,1,2] + [0,1] is direct?", sumset(clash).is_direct, "| witness:", sumset(clash).witness)

canon = FiniteCollection([[0, 1, 5, 6, 12, 25, 29, 36, 42, 48, 49, 53], [0, 18], [0, 8, 16]])
print("\nan aperiodic rhythm with two periodic partners:")
print("  direct:", sumset(canon).is_direct, "| tiles Z/72Z:", tiles_mod(canon, 72))
