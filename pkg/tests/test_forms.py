import numpy as np
import pytest

from selforth.basis_lab import Basis
from selforth.codes import LinearCode, ScalableCode, image_code, trace_code
from selforth.errors import LengthMismatch, TooLarge
from selforth.ff_core import default_tower
from selforth.forms import (
    BlockSum,
    GeneralTable,
    Hermitian,
    InducedTable,
    block_sum,
    canonical,
    eval_form,
    eval_induced,
    hermitian_kl,
    induce_form,
    random_table,
    restricted_table,
    selforth_bruteforce,
    selforth_linear,
    zero_map_form,
)


def test_eval_examples(gf4):
    w = gf4.primitive
    assert eval_form(canonical(2), (1, 1), (1, 1), gf4) == 0
    assert eval_form(Hermitian(1), (1,), (w,), gf4) == gf4.mul(w, w)
    t = default_tower(2, 6)
    a = t.primitive
    assert eval_form(Hermitian(3), (a,), (a,), t) == t.pow(a, 9)


def test_length_mismatch(gf4):
    with pytest.raises(LengthMismatch):
        eval_form(canonical(2), (1,), (1, 1), gf4)
    with pytest.raises(LengthMismatch):
        eval_form(canonical(2), (1, 1, 1), (1, 1, 1), gf4)


def test_hermitian_kl_index(gf64):
    assert hermitian_kl(gf64, 1, 1).j == 3
    assert hermitian_kl(gf64, 2, 0).j == 4


def test_induce_hermitian(gf64):
    assert induce_form(canonical(2), gf64) == Hermitian(0, 6)
    assert induce_form(hermitian_kl(gf64, 2, 1, 2), gf64) == Hermitian(1, 6)


def test_induce_single_entry():
    t = default_tower(2, 3)
    fi = induce_form(GeneralTable(1, {(0, 0, 0, 0): 1}), t)
    assert isinstance(fi, InducedTable) and fi.b == {(0, 0, 0, 0): 1}


def test_induce_sums_over_shifts(gf16):
    # a_00(0)(0) + a_00(2)(0): both reduce to b_0000 since r = 2
    f = GeneralTable(1, {(0, 0, 0, 0): 3, (0, 0, 2, 0): 5})
    assert induce_form(f, gf16).b == {(0, 0, 0, 0): gf16.add(3, 5)}


def test_eval_induced_canonical():
    t = default_tower(2, 2)
    fi = induce_form(canonical(3), t)
    assert eval_induced(fi, (1, 0, 1, 0, 1, 1), (1, 0, 1, 0, 1, 1), t) == 0
    assert eval_induced(fi, (0,) * 6, (1, 0, 1, 0, 1, 1), t) == 0


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (4, 2), (2, 3), (4, 3)])
def test_induced_matches_block_sum(q, m, rng):
    t = default_tower(q, m)
    for _ in range(30):
        n = int(rng.integers(1, 4))
        f = random_table(t, n, rng)
        fi, bs = induce_form(f, t), block_sum(f, t)
        x = [int(rng.integers(t.q)) for _ in range(n * m)]
        y = [int(rng.integers(t.q)) for _ in range(n * m)]
        assert eval_induced(fi, x, y, t) == eval_form(bs, x, y, t)


@pytest.mark.parametrize("q,m", [(2, 2), (4, 2), (8, 2), (4, 3)])
def test_zero_map_form(q, m, rng):
    t = default_tower(q, m)
    f = zero_map_form(t, 2)
    fi = induce_form(f, t)
    for _ in range(30):
        x = [int(rng.integers(t.q)) for _ in range(2 * m)]
        y = [int(rng.integers(t.q)) for _ in range(2 * m)]
        assert eval_induced(fi, x, y, t) == 0
        assert eval_form(block_sum(f, t), x, y, t) == 0


def test_restricted_table(gf16):
    f = GeneralTable(1, {(0, 0, 0, 2): 1})
    rt = restricted_table(f, gf16)
    assert rt.m == 1 and rt.b == {(0, 0, 0, 0): 1}


def test_counterexample_oracles(gf4):
    w = gf4.primitive
    c = ScalableCode(gf4, [(1, w, gf4.mul(w, w))])
    for b in ([1, w], [1, gf4.mul(w, w)], [w, gf4.mul(w, w)]):
        img = image_code(c, Basis(gf4, tuple(b)))
        assert selforth_bruteforce(img.codewords(), induce_form(canonical(3), gf4), gf4)
    assert not selforth_bruteforce(trace_code(c).codewords(), canonical(3), gf4)
    assert selforth_bruteforce(np.zeros((1, 3), dtype=np.int64), canonical(3), gf4)
    assert selforth_bruteforce(np.zeros((0, 3), dtype=np.int64), canonical(3), gf4)


def test_bruteforce_methods_agree(rng):
    for q, m in [(2, 2), (3, 2), (4, 2)]:
        t = default_tower(q, m)
        for _ in range(15):
            f = random_table(t, 2, rng, density=0.5)
            c = LinearCode(t, [[t.random(rng) for _ in range(2)]])
            words = c.codewords()
            assert selforth_bruteforce(words, f, t) == selforth_bruteforce(words, f, t, method="direct")


def test_bruteforce_guard(gf4, monkeypatch):
    monkeypatch.setenv("SELFORTH_LIMIT", "10")
    with pytest.raises(TooLarge):
        selforth_bruteforce(np.zeros((4, 2), dtype=np.int64), canonical(2), gf4)


def test_selforth_linear_examples(gf4):
    assert selforth_linear(LinearCode(gf4, [(1, 1)]), canonical())


def test_selforth_linear_matches_bruteforce(rng):
    for i in range(100):
        t = default_tower(*[(2, 2), (3, 2), (4, 2)][i % 3])
        n = int(rng.integers(1, 5))
        k = int(rng.integers(1, 3)) if t.order <= 9 else 1
        c = LinearCode(t, [[t.random(rng) for _ in range(n)] for _ in range(k)], n=n)
        f = Hermitian(int(rng.integers(t.degree))) if i % 2 else random_table(t, n, rng, density=0.4)
        assert selforth_linear(c, f) == selforth_bruteforce(c.codewords(), f, t)
        s = ScalableCode(t, [[t.random(rng) for _ in range(n)]])
        assert selforth_linear(s, f) == selforth_bruteforce(s.codewords(), f, t)


def test_form_types_hashable(gf4):
    f = GeneralTable(2, {(1, 0, 0, 1): 2, (0, 0, 0, 0): 1})
    g = GeneralTable(2, [((0, 0, 0, 0), 1), ((1, 0, 0, 1), 2)])
    assert f == g and hash(f) == hash(g)
    assert isinstance(block_sum(f, gf4), BlockSum)
