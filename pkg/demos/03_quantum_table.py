"""
Quantum codes from cyclic codes over GF(4^m)
============================================

Nonzero sets S = {1..delta}; "All" rows satisfy the trace condition, other
rows hold for a specific dual basis only.
"""

from selforth.basis_lab import power_sum_profile
from selforth.codes import CyclicCode, cyclic_trace_zero_set, dual_distance_by_columns
from selforth.ff_core import default_tower
from selforth.quantum import format_table, reference_pool, profile_pool, search_table

for m, n0 in ((2, 15), (3, 7), (3, 63)):
    print(f"m={m}, n0={n0}")
    print(format_table(search_table(m, n0)))
    print()

# why length 7 needs B'1: the trace code picks up whole 4-cyclotomic cosets
t = default_tower(4, 3)
zc, sc = cyclic_trace_zero_set(CyclicCode(t, 7, nonzero_set={1, 2, 3}))
print("S={1,2,3}: trace nonzero set", sorted(sc), "trace zeros", sorted(zc))
for label, b in reference_pool(3):
    print(label, "vanishing gates", sorted(power_sum_profile(b).vanishing))
print("dual distance at delta=3:", dual_distance_by_columns(CyclicCode(t, 7, nonzero_set={1, 2, 3})))

# one basis per vanishing pattern reproduces the same parameters
rows = search_table(3, 7, reference_pool(3) + profile_pool(3))
print(format_table(rows))
