"""Bases of GF(q^m) over GF(q), trace-dual bases and dual-basis power sums.

The power sum at Frobenius index ``j`` of a family ``b_1, ..., b_m`` is
``sum_s b_s * b_s ** (p ** j)``, i.e. the sum of the ``(1 + p^j)``-th powers.
Its vanishing pattern over the dual basis decides which conjugate forms a
code has to be self-orthogonal under for its image to be self-orthogonal.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from . import _limits
from .errors import BadRange, NotABasis, TooLarge, TowerMismatch, WrongCount
from .ff_core import FElem, FieldTower
from .linalg import inverse, rank


@dataclass(frozen=True)
class Basis:
    """An ordered GF(q)-basis of the tower's top field."""

    tower: FieldTower = field(repr=False)
    elems: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elems", tuple(int(e) for e in self.elems))
        if not is_basis(self.tower, self.elems):
            raise NotABasis(f"{self.format()} is not a basis of GF({self.tower.order}) over GF({self.tower.q})")

    @classmethod
    def of(cls, tower: FieldTower, items: Iterable[Any]) -> Basis:
        return cls(tower, tuple(tower.parse(x) for x in items))

    def __iter__(self):
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def format(self) -> list[str]:
        return [self.tower.format(e) for e in self.elems]

    def __repr__(self) -> str:
        return "Basis{" + ", ".join(self.format()) + "}"


@dataclass(frozen=True)
class DualBasisPair:
    """An imaging basis together with its trace-dual partner."""

    basis: Basis
    dual: Basis

    @classmethod
    def from_basis(cls, b: Basis) -> DualBasisPair:
        return cls(b, dual_basis(b))

    @classmethod
    def from_dual(cls, d: Basis) -> DualBasisPair:
        return cls(dual_basis(d), d)


@dataclass(frozen=True)
class PowerSumProfile:
    dual: Basis
    sums: dict[int, int]
    vanishing: frozenset[int]

    def format(self) -> dict[int, str]:
        return {j: self.dual.tower.format(v) for j, v in self.sums.items()}


def _codes(t: FieldTower, elems: Iterable[Any]) -> list[int]:
    out = []
    for e in elems:
        if isinstance(e, FElem) and e.tower is not t:
            raise TowerMismatch("basis element from a different tower")
        out.append(t.parse(e))
    return out


def is_basis(t: FieldTower, elems: Sequence[Any]) -> bool:
    """True iff the m given elements are linearly independent over GF(q)."""
    codes = _codes(t, elems)
    if len(codes) != t.m:
        raise WrongCount(f"expected {t.m} elements, got {len(codes)}")
    return rank([t.base_coords(c) for c in codes], t) == t.m


def dual_basis(b: Basis) -> Basis:
    """The unique basis b' with Tr(b_i b'_j) = delta_ij."""
    t = b.tower
    gram = [[t.trace(t.mul(x, y)) for y in b.elems] for x in b.elems]
    c = inverse(gram, t)
    return Basis(t, tuple(t.sum(t.mul(c[j][k], b.elems[k]) for k in range(t.m)) for j in range(t.m)))


def trace_matrix(b: Sequence[int], d: Sequence[int], t: FieldTower) -> list[list[int]]:
    return [[t.trace(t.mul(x, y)) for y in d] for x in b]


def is_self_dual(b: Basis) -> bool:
    t = b.tower
    return all(t.trace(t.mul(x, y)) == (1 if i == j else 0) for i, x in enumerate(b.elems) for j, y in enumerate(b.elems))


def power_sum(dual: Basis | Sequence[int], j: int, t: FieldTower | None = None) -> int:
    """sum_s b_s ** (1 + p ** j) over the given (dual) basis elements."""
    if isinstance(dual, Basis):
        t, elems = dual.tower, dual.elems
    else:
        elems = dual
    return t.sum(t.mul(x, t.frob(x, j)) for x in elems)


def power_sum_profile(dual: Basis) -> PowerSumProfile:
    t = dual.tower
    sums = {j: power_sum(dual, j) for j in range(t.degree)}
    return PowerSumProfile(dual, sums, frozenset(j for j, v in sums.items() if v == 0))


def count_ordered_bases(t: FieldTower) -> int:
    return math.prod(t.order - t.q**i for i in range(t.m))


def enumerate_bases(t: FieldTower, unordered: bool = False) -> Iterator[Basis]:
    """Every basis of GF(q^m)/GF(q) exactly once (as sorted tuples if unordered)."""
    _limits.check("ordered bases", count_ordered_bases(t), _limits.MAX_BASES // 4)
    scalars = list(t.base_elements())

    def extend(chosen: list[int], span: set[int]) -> Iterator[tuple[int, ...]]:
        if len(chosen) == t.m:
            yield tuple(chosen)
            return
        start = chosen[-1] + 1 if (unordered and chosen) else 1
        for c in range(start, t.order):
            if c in span:
                continue
            multiples = [t.mul(lam, c) for lam in scalars]
            new_span = {t.add(s, x) for s in span for x in multiples}
            yield from extend(chosen + [c], new_span)

    for elems in extend([], {0}):
        # independence is guaranteed by construction
        b = object.__new__(Basis)
        object.__setattr__(b, "tower", t)
        object.__setattr__(b, "elems", elems)
        yield b


# ---------------------------------------------------------------------------
# quadratic extensions


class PowerSumClass(enum.Enum):
    ALWAYS_NONVANISHING = "AlwaysNonvanishing"
    CAN_VANISH = "CanVanish"


def v2(n: int) -> int:
    """2-adic valuation of a positive integer."""
    return (n & -n).bit_length() - 1


def classify_quadratic_power_sum(p: int, r: int, l: int) -> PowerSumClass:
    """Whether a^(1+p^l) + b^(1+p^l) can vanish for a basis {a, b} of GF(q^2)/GF(q).

    Closed-form arithmetic test on p, r, l only; ``q = p**r`` and
    ``0 <= l < 2r``.
    """
    if r < 1 or not 0 <= l < 2 * r:
        raise BadRange(f"need r >= 1 and 0 <= l < 2r, got r={r}, l={l}")
    pl = p**l + 1
    if p == 2:
        ok = math.gcd(pl, 2**r + 1) == 1
    else:
        some_power_missing = v2(p**r - 1) > v2(pl) and math.gcd(pl, p**r + 1) == 2
        all_powers_divide = v2(p ** (2 * r) - 1) <= v2(pl)
        ok = some_power_missing or all_powers_divide
    return PowerSumClass.ALWAYS_NONVANISHING if ok else PowerSumClass.CAN_VANISH


def quadratic_power_sum_exhaustive(t: FieldTower, l: int) -> PowerSumClass:
    """Oracle for classify_quadratic_power_sum: search every basis of GF(q^2)/GF(q)."""
    if t.m != 2:
        raise BadRange("quadratic extension required")
    if not 0 <= l < 2 * t.r:
        raise BadRange(f"l={l} out of range")
    e = 1 + t.p**l
    elems = np.arange(t.order, dtype=np.int64)
    pw = t.vpow(elems, e)
    negpw = t.vneg(pw)
    for a in range(1, t.order):
        hits = np.flatnonzero(pw == negpw[a])
        if hits.size == 0:
            continue
        ratios = t.vmul(hits, np.full_like(hits, t.inv(a)))
        if np.any(ratios >= t.q):
            # some b with a^e + b^e = 0 and b not a GF(q)-multiple of a
            return PowerSumClass.CAN_VANISH
    return PowerSumClass.ALWAYS_NONVANISHING


def gcd_pm_reduced(p: int, e1: int, s1: int, e2: int, s2: int) -> int:
    """gcd(p^e1 + s1, p^e2 + s2) by repeated exponent reduction.

    Writing e1 = a*e2 + b, the pair (p^e1 + s1, p^e2 + s2) has the same gcd
    as (p^b + s1', p^e2 + s2) with s1' = s1*(-1)^a when s2 = +1 and s1' = s1
    when s2 = -1.
    """
    while True:
        if e1 < e2:
            e1, s1, e2, s2 = e2, s2, e1, s1
        if e2 == 0:
            return math.gcd(p**e1 + s1, 1 + s2)
        a, b = divmod(e1, e2)
        if s2 == 1 and a % 2:
            s1 = -s1
        e1 = b


def gcd_pm(p: int, exp1: int, sign1: int, exp2: int, sign2: int) -> int:
    """gcd(p^exp1 + sign1, p^exp2 + sign2), cross-checked against the reduction."""
    if sign1 not in (1, -1) or sign2 not in (1, -1):
        raise BadRange("signs must be +1 or -1")
    direct = math.gcd(p**exp1 + sign1, p**exp2 + sign2)
    reduced = gcd_pm_reduced(p, exp1, sign1, exp2, sign2)
    if direct != reduced:
        raise AssertionError(f"gcd reduction disagrees: {direct} != {reduced}")
    return direct


def divides_power_of_two_test(r: int, l: int) -> bool:
    """True iff some power of two divides r but not l (l = 0 gives False)."""
    if l == 0:
        return False
    return v2(r) > v2(l)
