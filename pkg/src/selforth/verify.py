"""Differential testing: power-sum criteria against brute force on explicit images.

Random instances come in three flavours so that both verdicts show up often:
uniformly random codes, single-orbit codes rejection-sampled to satisfy the
conjugate conditions a chosen basis gates in, and small cyclic codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .basis_lab import Basis, dual_basis, is_basis, power_sum
from .codes import CyclicCode, LinearCode, ScalableCode, image_code, trace_code
from .criteria import image_selforth, trace_selforth
from .ff_core import FieldTower, default_tower
from .forms import Form, Hermitian, block_sum, induce_form, selforth_bruteforce

DEFAULT_FIELDS = ((2, 2), (3, 2), (4, 2), (4, 3))


@dataclass(frozen=True)
class Instance:
    tower: FieldTower = field(repr=False)
    code: object
    basis: Basis
    form: Hermitian
    kind: str


@dataclass
class Outcome:
    instance: Instance
    image_theorem: bool
    image_oracle: bool
    trace_theorem: bool
    trace_oracle: bool

    @property
    def agree(self) -> bool:
        return self.image_theorem == self.image_oracle and self.trace_theorem == self.trace_oracle


@dataclass
class Report:
    outcomes: list[Outcome]

    @property
    def total(self) -> int:
        return len(self.outcomes)

    @property
    def agreed(self) -> int:
        return sum(o.agree for o in self.outcomes)

    @property
    def image_true(self) -> int:
        return sum(o.image_oracle for o in self.outcomes)

    @property
    def trace_true(self) -> int:
        return sum(o.trace_oracle for o in self.outcomes)

    def summary(self) -> str:
        return (
            f"{self.agreed}/{self.total} agree "
            f"(image true {self.image_true}, trace true {self.trace_true})"
        )


def random_basis(t: FieldTower, rng: np.random.Generator) -> Basis:
    while True:
        elems = [t.random(rng, nonzero=True) for _ in range(t.m)]
        if is_basis(t, elems):
            return Basis(t, elems)


def random_vector(t: FieldTower, n: int, rng: np.random.Generator) -> list[int]:
    while True:
        v = [t.random(rng) for _ in range(n)]
        if any(v):
            return v


def selforth_orbit(t: FieldTower, n: int, js: list[int], rng: np.random.Generator, tries: int = 400) -> list[int] | None:
    """A nonzero v with sum_i v_i^(1 + p^j) = 0 for each j in js, if found quickly."""
    last = np.arange(t.order, dtype=np.int64)
    for _ in range(tries):
        head = [t.random(rng) for _ in range(n - 1)]
        ok = np.ones(t.order, dtype=bool)
        for j in js:
            part = t.sum(t.mul(x, t.frob(x, j)) for x in head)
            ok &= t.vadd(t.vmul(last, t.vfrob(last, j)), np.full_like(last, part)) == 0
        cands = np.flatnonzero(ok)
        cands = [int(c) for c in cands if c or any(head)]
        if cands:
            return head + [cands[int(rng.integers(len(cands)))]]
    return None


def random_instance(t: FieldTower, rng: np.random.Generator, max_n: int = 6) -> Instance:
    basis = random_basis(t, rng)
    l = int(rng.integers(t.r))
    form = Hermitian(l)
    flavour = rng.random()
    n = int(rng.integers(1, max_n + 1))
    # keep brute force small in the big fields
    k_max = 2 if t.order <= 16 or n <= 3 else 1
    if flavour < 0.3:
        k = int(rng.integers(1, k_max + 1))
        code = LinearCode(t, [random_vector(t, n, rng) for _ in range(k)], n=n)
        kind = "linear"
    elif flavour < 0.45:
        code = ScalableCode(t, [random_vector(t, n, rng) for _ in range(int(rng.integers(1, 4)))], n=n)
        kind = "scalable"
    elif flavour < 0.85:
        dual = dual_basis(basis).elems
        js = [(l + t.r * k) % t.degree for k in range(t.m)]
        if rng.random() < 0.7:
            js = [j for j in js if power_sum(dual, j, t) != 0]
        v = selforth_orbit(t, max(n, 2), js, rng)
        if v is None:
            v = random_vector(t, n, rng)
        code = ScalableCode(t, [v])
        kind = "targeted"
    else:
        lengths = [d for d in range(2, max_n + 1) if (t.order - 1) % d == 0] or [1]
        nn = lengths[int(rng.integers(len(lengths)))]
        z = [i for i in range(nn) if rng.random() < 0.5]
        if len(z) < nn - 2:
            z = list(range(nn))[: nn - 2] if nn > 2 else z
        code = CyclicCode(t, nn, zero_set=z)
        kind = "cyclic"
    return Instance(t, code, basis, form, kind)


def check_instance(inst: Instance) -> Outcome:
    t, c, b, f = inst.tower, inst.code, inst.basis, inst.form
    im_thm = image_selforth(c, b, f).overall
    tr_thm = trace_selforth(c, f).overall
    im_words = image_code(c, b).codewords()
    tr_words = trace_code(c).codewords()
    im_orc = selforth_bruteforce(im_words, induce_form(f, t), t)
    tr_orc = selforth_bruteforce(tr_words, Hermitian(f.j % t.r), t)
    return Outcome(inst, im_thm, im_orc, tr_thm, tr_orc)


def run(seed: int = 0, instances: int = 200, fields=DEFAULT_FIELDS) -> Report:
    rng = np.random.default_rng(seed)
    towers = [default_tower(q, m) for q, m in fields]
    outcomes = []
    for i in range(instances):
        t = towers[i % len(towers)]
        outcomes.append(check_instance(random_instance(t, rng)))
    return Report(outcomes)


def block_sum_oracle(c, b: Basis, f: Form, t: FieldTower) -> bool:
    """Brute force on the image under the definitional block-sum form."""
    return selforth_bruteforce(image_code(c, b).codewords(), block_sum(f, t), t)
