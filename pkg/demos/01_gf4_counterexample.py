"""
Images that are self-orthogonal for every basis, with a trace that is not
==========================================================================

The length-3 code spanned (as a scalable code) by (1, w, w^2) over GF(4).
Run with ``python3 demos/01_gf4_counterexample.py``.
"""

from selforth import Basis, ScalableCode, canonical, default_tower, image_code, trace_code
from selforth.basis_lab import dual_basis, power_sum_profile
from selforth.criteria import all_bases_report, image_selforth, trace_selforth

t = default_tower(2, 2)  # GF(4) over GF(2), w^2 = w + 1
w = t.primitive
c = ScalableCode(t, [(1, w, t.mul(w, w))])
print("codewords:", [[t.format(x) for x in v] for v in c.codewords()])

# the three bases of GF(4) over GF(2)
bases = [Basis.of(t, b) for b in (["a^0", "a^1"], ["a^1", "a^2"], ["a^0", "a^2"])]

for b in bases:
    img = image_code(c, b)  # block order: one block of n coordinates per dual element
    v = image_selforth(c, b, canonical())
    prof = power_sum_profile(dual_basis(b))
    print(b, "dual", dual_basis(b), "power sums", prof.format())
    print("   image words", sorted(tuple(int(x) for x in w_) for w_ in img.codewords()))
    print("   image self-orthogonal:", v.overall)

# the trace needs both conjugate forms; the Hermitian one fails
print("trace words", sorted(tuple(int(x) for x in w_) for w_ in trace_code(c).codewords()))
tr = trace_selforth(c, canonical())
for e in tr.evidence:
    print(f"   conjugate form j={e.j}: {'ok' if e.checked else 'fails'}")
print("trace self-orthogonal:", tr.overall)

rep = all_bases_report(c, canonical())
print("all bases:", rep.all_bases, " trace:", rep.trace, " q=m=2 exception:", rep.exception_case)
