"""
Dual-basis power sums
=====================

Which conjugate forms a code must satisfy is decided by the vanishing pattern
of sum_s b_s^(1 + p^j) over the dual basis.
"""

import math

from selforth import Basis, default_tower
from selforth.basis_lab import (
    classify_quadratic_power_sum,
    enumerate_bases,
    power_sum_profile,
    quadratic_power_sum_exhaustive,
)

# GF(9) over GF(3): the dual basis {1, g^2}
t = default_tower(3, 2)
# j=0 is 1 + g^4 = 0; j=1 is 1 + g^8 = 2, which prints as a^4 since g^4 = -1
print("GF(9), {1, g^2}:", power_sum_profile(Basis.of(t, ["a^0", "a^2"])).format())

# GF(64) over GF(4): the two bases used for the cyclic families
t = default_tower(4, 3)
for label, dual in (("B'1", ["a^0", "a^3", "a^15"]), ("B'2", ["a^0", "a^1", "a^5"])):
    prof = power_sum_profile(Basis.of(t, dual))
    print(label, "vanishing exponents", sorted(1 + 2**j for j in prof.vanishing))

# how many unordered bases share each pattern at the Hermitian gates j = 1, 3, 5
patterns = {}
for b in enumerate_bases(t, unordered=True):
    key = tuple(j for j in (1, 3, 5) if j in power_sum_profile(b).vanishing)
    patterns[key] = patterns.get(key, 0) + 1
print("gate patterns over all", sum(patterns.values()), "bases:", dict(sorted(patterns.items())))

# quadratic extensions: when can a^(1+p^l) + b^(1+p^l) vanish?
for q in (4, 9, 16, 25, 49):
    p = min(d for d in range(2, q + 1) if q % d == 0)
    r = round(math.log(q, p))
    row = [classify_quadratic_power_sum(p, r, l).value for l in range(2 * r)]
    check = [quadratic_power_sum_exhaustive(default_tower(q, 2), l).value for l in range(2 * r)]
    print(f"GF({q}^2): {row} (exhaustive agrees: {row == check})")
