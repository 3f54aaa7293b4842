import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from selforth.basis_lab import Basis, dual_basis, gcd_pm, is_basis, power_sum_profile
from selforth.codes import CyclicCode, LinearCode, ScalableCode, cyclotomic_cosets, image_code, trace_code
from selforth.criteria import image_selforth, trace_selforth
from selforth.ff_core import default_tower
from selforth.forms import (
    Hermitian,
    block_sum,
    eval_form,
    eval_induced,
    induce_form,
    random_table,
    selforth_bruteforce,
    selforth_linear,
)

TOWERS = [(2, 2), (3, 2), (2, 3), (4, 2), (5, 2), (4, 3), (9, 2)]
SMALL = [(2, 2), (3, 2), (4, 2), (2, 3)]

towers = st.sampled_from(TOWERS).map(lambda qm: default_tower(*qm))
small_towers = st.sampled_from(SMALL).map(lambda qm: default_tower(*qm))
seeds = st.integers(0, 2**32 - 1)
PROP = settings(max_examples=60, deadline=None)


def elems(t, k):
    return st.lists(st.integers(0, t.order - 1), min_size=k, max_size=k)


@st.composite
def tower_and(draw, k, pool=towers):
    t = draw(pool)
    return t, draw(elems(t, k))


def _basis(t, rng):
    while True:
        e = [t.random(rng, nonzero=True) for _ in range(t.m)]
        if is_basis(t, e):
            return Basis(t, e)


@PROP
@given(tower_and(3))
def test_field_axioms(data):
    t, (a, b, c) = data
    assert t.mul(a, b) == t.mul(b, a) and t.add(a, b) == t.add(b, a)
    assert t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c))
    assert t.add(t.add(a, b), c) == t.add(a, t.add(b, c))
    assert t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c))
    assert t.add(a, t.neg(a)) == 0 and t.sub(a, b) == t.add(a, t.neg(b))
    if a:
        assert t.mul(a, t.inv(a)) == 1


@PROP
@given(tower_and(2), st.integers(-20, 20))
def test_frobenius_is_automorphism(data, j):
    t, (a, b) = data
    assert t.frob(t.add(a, b), j) == t.add(t.frob(a, j), t.frob(b, j))
    assert t.frob(t.mul(a, b), j) == t.mul(t.frob(a, j), t.frob(b, j))
    assert t.frob(a % t.p, j) == a % t.p
    assert (t.frob(a, t.r) == a) == (a < t.q)


@PROP
@given(tower_and(2), st.data())
def test_trace_is_linear_into_base(data, d):
    t, (a, b) = data
    lam, mu = d.draw(st.integers(0, t.q - 1)), d.draw(st.integers(0, t.q - 1))
    ta, tb = t.trace(a), t.trace(b)
    assert ta < t.q and t.frob(ta, t.r) == ta
    assert t.trace(t.add(t.mul(lam, a), t.mul(mu, b))) == t.add(t.mul(lam, ta), t.mul(mu, tb))


@PROP
@given(tower_and(1))
def test_format_parse_round_trip(data):
    t, (a,) = data
    assert t.parse(t.format(a)) == a
    assert t.from_coords(t.coords(a)) == a


@PROP
@given(towers, seeds)
def test_dual_basis_involution(t, seed):
    b = _basis(t, np.random.default_rng(seed))
    d = dual_basis(b)
    assert dual_basis(d) == b
    for i, x in enumerate(b):
        for j, y in enumerate(d):
            assert t.trace(t.mul(x, y)) == int(i == j)


@PROP
@given(towers, seeds)
def test_power_sums_not_all_zero_per_residue(t, seed):
    prof = power_sum_profile(_basis(t, np.random.default_rng(seed)))
    for j0 in range(t.r):
        assert any(prof.sums[j0 + w * t.r] for w in range(t.m))
    assert prof.vanishing == frozenset(j for j, v in prof.sums.items() if v == 0)


@PROP
@given(towers, seeds, st.integers(1, 3))
def test_form_biadditive(t, seed, n):
    rng = np.random.default_rng(seed)
    f = random_table(t, n, rng, density=0.5)
    x, x2, y, y2 = ([t.random(rng) for _ in range(n)] for _ in range(4))
    xs = [t.add(a, b) for a, b in zip(x, x2)]
    ys = [t.add(a, b) for a, b in zip(y, y2)]
    assert eval_form(f, xs, y, t) == t.add(eval_form(f, x, y, t), eval_form(f, x2, y, t))
    assert eval_form(f, x, ys, t) == t.add(eval_form(f, x, y, t), eval_form(f, x, y2, t))


@PROP
@given(towers, seeds, st.integers(1, 3))
def test_hermitian_scalar_law(t, seed, n):
    rng = np.random.default_rng(seed)
    j = int(rng.integers(t.degree))
    f = Hermitian(j)
    x, y = ([t.random(rng) for _ in range(n)] for _ in range(2))
    lam, mu = t.random(rng), t.random(rng)
    lhs = eval_form(f, [t.mul(lam, a) for a in x], [t.mul(mu, b) for b in y], t)
    assert lhs == t.mul(t.mul(lam, t.frob(mu, j)), eval_form(f, x, y, t))


@PROP
@given(towers, seeds, st.integers(1, 3))
def test_induced_equals_block_sum(t, seed, n):
    rng = np.random.default_rng(seed)
    f = random_table(t, n, rng)
    x = [int(rng.integers(t.q)) for _ in range(n * t.m)]
    y = [int(rng.integers(t.q)) for _ in range(n * t.m)]
    assert eval_induced(induce_form(f, t), x, y, t) == eval_form(block_sum(f, t), x, y, t)


@PROP
@given(small_towers, seeds, st.integers(1, 3))
def test_selforth_linear_is_bruteforce(t, seed, n):
    rng = np.random.default_rng(seed)
    c = LinearCode(t, [[t.random(rng) for _ in range(n)]], n=n)
    f = random_table(t, n, rng, density=0.5) if seed % 2 else Hermitian(seed % t.degree)
    assert selforth_linear(c, f) == selforth_bruteforce(c.codewords(), f, t)


@PROP
@given(small_towers, seeds, st.integers(1, 3))
def test_image_dimension(t, seed, n):
    rng = np.random.default_rng(seed)
    c = LinearCode(t, [[t.random(rng) for _ in range(n)] for _ in range(2)], n=n)
    img = image_code(c, _basis(t, rng))
    assert img.n == n * t.m and img.k == t.m * c.k


@PROP
@given(small_towers, seeds, st.integers(1, 4))
def test_criteria_equal_bruteforce(t, seed, n):
    rng = np.random.default_rng(seed)
    b = _basis(t, rng)
    l = int(rng.integers(t.r))
    c = ScalableCode(t, [[t.random(rng) for _ in range(n)] for _ in range(int(rng.integers(1, 3)))], n=n)
    im = selforth_bruteforce(image_code(c, b).codewords(), Hermitian(l), t)
    tr = selforth_bruteforce(trace_code(c).codewords(), Hermitian(l), t)
    assert image_selforth(c, b, Hermitian(l)).overall == im
    assert trace_selforth(c, Hermitian(l)).overall == tr
    if tr:
        assert im


@PROP
@given(st.sampled_from([3, 5, 7, 9, 15, 21, 63, 255]), st.sampled_from([2, 4, 16]))
def test_cosets_partition(n, q):
    cos = cyclotomic_cosets(n, q)
    flat = [x for c in cos for x in c]
    assert sorted(flat) == list(range(n))
    for c in cos:
        assert {c[0] * q**i % n for i in range(len(c))} == set(c)


@PROP
@given(st.sampled_from([2, 3, 5]), st.integers(1, 10), st.integers(1, 10), st.sampled_from([1, -1]), st.sampled_from([1, -1]))
def test_gcd_pm_reduction(p, e1, e2, s1, s2):
    assert gcd_pm(p, e1, s1, e2, s2) == math.gcd(p**e1 + s1, p**e2 + s2)


@PROP
@given(st.sampled_from([(2, 2, 3), (4, 2, 5), (4, 3, 7), (2, 3, 7)]), seeds)
def test_cyclic_dimension_and_generator(params, seed):
    q, m, n = params
    t = default_tower(q, m)
    rng = np.random.default_rng(seed)
    z = {i for i in range(n) if rng.random() < 0.5}
    c = CyclicCode(t, n, zero_set=z)
    g = c.generator_poly()
    assert len(g) == len(z) + 1 and g[-1] == 1
    assert c.k == n - len(z)
