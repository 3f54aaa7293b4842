import itertools
import math

import pytest

from selforth.basis_lab import (
    Basis,
    DualBasisPair,
    PowerSumClass,
    classify_quadratic_power_sum,
    count_ordered_bases,
    divides_power_of_two_test,
    dual_basis,
    enumerate_bases,
    gcd_pm,
    gcd_pm_reduced,
    is_basis,
    is_self_dual,
    power_sum,
    power_sum_profile,
    quadratic_power_sum_exhaustive,
    trace_matrix,
)
from selforth.errors import BadRange, NotABasis, TooLarge, TowerMismatch, WrongCount
from selforth.ff_core import default_tower


def test_is_basis_examples(gf4, gf9):
    w = gf4.primitive
    assert is_basis(gf4, [1, w])
    assert not is_basis(gf4, [1, 1])
    assert is_basis(gf9, [1, gf9.pow(gf9.primitive, 2)])
    with pytest.raises(WrongCount):
        is_basis(gf4, [1])
    with pytest.raises(TowerMismatch):
        is_basis(gf4, [gf9.one, gf9.one])


def test_basis_validation(gf4):
    with pytest.raises(NotABasis):
        Basis(gf4, (1, 1))
    b = Basis.of(gf4, ["a^0", "a^1"])
    assert repr(b) == "Basis{a^0, a^1}"


def test_dual_of_one_omega(gf4):
    w = gf4.primitive
    d = dual_basis(Basis(gf4, (1, w)))
    assert d.elems == (gf4.mul(w, w), 1)


def test_self_dual_gf4(gf4):
    w = gf4.primitive
    b = Basis(gf4, (w, gf4.mul(w, w)))
    assert is_self_dual(b)
    assert dual_basis(b) == b


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (2, 3), (4, 2), (4, 3)])
def test_dual_basis_involution_and_gram(q, m, rng):
    t = default_tower(q, m)
    for _ in range(10):
        while True:
            elems = [t.random(rng, nonzero=True) for _ in range(m)]
            if is_basis(t, elems):
                break
        b = Basis(t, elems)
        d = dual_basis(b)
        assert dual_basis(d) == b
        ident = [[int(i == j) for j in range(m)] for i in range(m)]
        assert trace_matrix(b.elems, d.elems, t) == ident


def test_pair_constructors(gf9):
    b = Basis.of(gf9, ["a^0", "a^2"])
    pair = DualBasisPair.from_basis(b)
    assert DualBasisPair.from_dual(pair.dual) == pair


def test_power_sum_gf4(gf4):
    w = gf4.primitive
    d = Basis(gf4, (gf4.mul(w, w), 1))
    assert power_sum(d, 0) == gf4.mul(w, w)
    assert power_sum(d, 1) == 0


def test_power_sum_gf9(gf9):
    g = gf9.primitive
    seq = [1, gf9.pow(g, 2)]
    # 1 + (g^2)^2 = 1 + g^4 = 0 and 1 + (g^2)^4 = 1 + g^8 = 2
    assert power_sum(seq, 0, gf9) == 0
    assert power_sum(seq, 1, gf9) == 2


def test_power_sum_gf64(gf64):
    a = gf64.primitive
    b1 = Basis(gf64, (1, gf64.pow(a, 3), gf64.pow(a, 15)))
    b2 = Basis(gf64, (1, a, gf64.pow(a, 5)))
    assert power_sum_profile(b1).vanishing == frozenset({1, 5})  # exponents 3 and 33
    assert power_sum_profile(b2).vanishing == frozenset({3})  # exponent 9
    # direct evaluation of the 3rd, 33rd and 9th powers
    for e, b in ((3, b1), (33, b1), (9, b2)):
        assert gf64.sum(gf64.pow(x, e) for x in b) == 0


def test_profile_format(gf4):
    prof = power_sum_profile(Basis.of(gf4, ["a^2", "a^0"]))
    assert prof.format() == {0: "a^2", 1: "0"}


def test_enumeration_counts(gf4, gf9):
    assert sorted(sorted(b.elems) for b in enumerate_bases(gf4, unordered=True)) == [[1, 2], [1, 3], [2, 3]]
    assert sum(1 for _ in enumerate_bases(gf4)) == 6
    assert sum(1 for _ in enumerate_bases(gf9)) == 48 == count_ordered_bases(gf9)
    assert count_ordered_bases(default_tower(4, 3)) == 63 * 60 * 48


def test_enumeration_unique(gf16):
    seen = [frozenset(b.elems) for b in enumerate_bases(gf16, unordered=True)]
    assert len(seen) == len(set(seen)) == count_ordered_bases(gf16) // 2


def test_enumeration_guard(monkeypatch):
    monkeypatch.setenv("SELFORTH_LIMIT", "10")
    with pytest.raises(TooLarge):
        next(enumerate_bases(default_tower(3, 2)))


def test_self_dual_power_sums(gf16):
    t = gf16
    for b in enumerate_bases(t, unordered=True):
        if is_self_dual(b):
            assert [power_sum(b, k * t.r) for k in range(t.m)] == [1] + [0] * (t.m - 1)


@pytest.mark.parametrize("q,m", [(2, 2), (4, 2), (2, 3), (8, 2)])
def test_even_q_first_power_sum_nonzero(q, m):
    t = default_tower(q, m)
    for b in enumerate_bases(t, unordered=True):
        s = t.sum(b.elems)
        assert power_sum(b, 0) == t.mul(s, s) != 0


@pytest.mark.parametrize("q,m", [(3, 2), (4, 2), (2, 3), (5, 2)])
def test_not_all_gated_sums_vanish(q, m):
    t = default_tower(q, m)
    for b in enumerate_bases(t, unordered=True):
        prof = power_sum_profile(b)
        for j0 in range(t.r):
            assert any(prof.sums[j0 + w * t.r] != 0 for w in range(t.m))


@pytest.mark.parametrize("q", [5, 9, 13])
def test_one_mod_four_quadratic(q):
    t = default_tower(q, 2)
    assert all(power_sum(b, 0) != 0 for b in enumerate_bases(t, unordered=True))


def test_classify_examples():
    assert classify_quadratic_power_sum(2, 2, 1) is PowerSumClass.ALWAYS_NONVANISHING
    assert classify_quadratic_power_sum(3, 1, 0) is PowerSumClass.CAN_VANISH
    assert classify_quadratic_power_sum(2, 1, 1) is PowerSumClass.CAN_VANISH
    with pytest.raises(BadRange):
        classify_quadratic_power_sum(2, 2, 4)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_classify_matches_exhaustive_small(q):
    t = default_tower(q, 2)
    for l in range(2 * t.r):
        assert classify_quadratic_power_sum(t.p, t.r, l) is quadratic_power_sum_exhaustive(t, l)


def test_gcd_pm_examples():
    assert gcd_pm(2, 5, 1, 2, 1) == 1
    assert gcd_pm(3, 4, 1, 4, 1) == 82
    with pytest.raises(BadRange):
        gcd_pm(2, 1, 0, 1, 1)


def test_gcd_pm_four_values():
    for p in (2, 3, 5):
        for l, r in itertools.product(range(1, 7), repeat=2):
            g = math.gcd(l, r)
            for s1, s2 in itertools.product((1, -1), repeat=2):
                v = gcd_pm(p, l, s1, r, s2)
                assert v in {1, 2, p**g + 1, p**g - 1}
                assert v == gcd_pm_reduced(p, l, s1, r, s2)


def test_divides_power_of_two():
    assert divides_power_of_two_test(2, 1)
    assert not divides_power_of_two_test(3, 1)
    assert divides_power_of_two_test(4, 2)
    assert not divides_power_of_two_test(4, 0)
