"""
General biadditive forms and their conjugate forms
==================================================

For a coefficient table a_ijkl the induced form has coefficients b_ijkl in
GF(q^m).  A coefficient outside GF(q) has to be split into its GF(q)
coordinates, one conjugate form per coordinate, or the test can accept
codes whose image is not self-orthogonal.
"""

import numpy as np

from selforth import Basis, LinearCode, default_tower, image_code
from selforth.basis_lab import DualBasisPair
from selforth.criteria import image_selforth_general
from selforth.forms import GeneralTable, eval_induced, induce_form, selforth_bruteforce, zero_map_form

t = default_tower(3, 2)
c = LinearCode(t, [(1, 7, 6)])
f = GeneralTable(3, {(1, 1, 0, 1): t.parse("a^4"), (2, 0, 0, 0): t.parse("a^7")})
pair = DualBasisPair.from_dual(Basis.of(t, ["a^5", "a^6"]))

truth = selforth_bruteforce(image_code(c, pair).codewords(), induce_form(f, t), t)
split = image_selforth_general(c, pair, f)
joined = image_selforth_general(c, pair, f, split=False)
print("brute force on the image:", truth)
print("split coefficients:      ", split.overall)
print("recombined coefficients: ", joined.overall)
for e in split.evidence:
    status = "skipped" if e.checked is None else ("ok" if e.checked else "FAIL")
    print(f"   k,l,w={e.klw} part={e.part} j={e.j} power sum={t.format(e.power_sum)} {status}")

# sum x_i y_i + x_i y_i^q induces the zero map when q is even
t = default_tower(4, 2)
rng = np.random.default_rng(0)
fz = induce_form(zero_map_form(t, 2), t)
print("induced coefficients:", fz.b)
vals = {eval_induced(fz, rng.integers(4, size=4).tolist(), rng.integers(4, size=4).tolist(), t) for _ in range(50)}
print("values on 50 random pairs:", vals)
