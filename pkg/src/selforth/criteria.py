"""Deciders for self-orthogonality of images and traces via power sums.

An image Im_B(C) of a scalable code is self-orthogonal under an induced form
exactly when C is self-orthogonal under every conjugate form whose dual-basis
power sum is nonzero; the trace needs every conjugate form.  For a general
form with induced coefficients b_ijkl the conjugate form attached to
(k, l, w) is

    sum_{i,j} c_ijklt^(p^-k) * x_i * y_j^(p^J),   J = (l - k + r*w) mod rm,

gated by the power sum at index J, one form for each GF(q)-coordinate
c_ijklt of b_ijkl (coordinates w.r.t. 1, y, ..., y^(m-1)).  The p^-k-th
root comes from taking p^k-th roots of the whole identity and matters only
when k > 0.  Coefficients outside GF(q) must be split into coordinates:
requiring the single recombined form sum b_ijkl^(p^-k) x_i y_j^(p^J) to
vanish is sufficient but not necessary.  ``split=False`` gives that
recombined test for comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .basis_lab import Basis, DualBasisPair, dual_basis, enumerate_bases, is_self_dual, power_sum
from .codes import Code, as_linear
from .errors import BadRange, TowerMismatch
from .ff_core import FieldTower
from .forms import Form, GeneralTable, Hermitian, as_table, canonical, induce_form, selforth_linear


@dataclass(frozen=True)
class Evidence:
    j: int
    power_sum: int | None
    checked: bool | None  # None when the power-sum gate skipped the check
    klw: tuple[int, int, int] | None = None
    part: int | None = None  # GF(q)-coordinate of the coefficients

    @property
    def ok(self) -> bool:
        return self.checked is None or self.checked


@dataclass(frozen=True)
class Verdict:
    overall: bool
    mode: str  # "image" or "trace"
    evidence: tuple[Evidence, ...]
    dual: tuple[int, ...] | None = field(default=None)

    def __bool__(self) -> bool:
        return self.overall


def _tower_of(c: Code) -> FieldTower:
    return c.tower


def _dual_elems(c: Code, b: Basis | DualBasisPair) -> tuple[int, ...]:
    basis = b.basis if isinstance(b, DualBasisPair) else b
    if basis.tower is not c.tower:
        raise TowerMismatch("basis and code live in different towers")
    return b.dual.elems if isinstance(b, DualBasisPair) else dual_basis(b).elems


class ConjugateChecks:
    """The conjugate forms of one (code, form) pair, each checked at most once."""

    def __init__(self, c: Code, f: Form, split: bool = True):
        t = _tower_of(c)
        self.tower = t
        self.code = as_linear(c)
        if self.code.over != "ext":
            raise TowerMismatch("criteria apply to codes over GF(q^m)")
        self._cache: dict[tuple, bool] = {}
        # entries: (klw or None, part, J, form or None when the form is identically zero)
        self.entries: list[tuple[tuple[int, int, int] | None, int | None, int, Form | None]] = []
        if isinstance(f, Hermitian):
            l = f.j % t.r
            for k in range(t.m):
                j = (l + t.r * k) % t.degree
                self.entries.append((None, None, j, Hermitian(j)))
            return
        if not isinstance(f, GeneralTable):
            raise BadRange("expected a Hermitian-type form or a coefficient table")
        if f.n != self.code.n:
            raise BadRange(f"form on length {f.n} for a length-{self.code.n} code")
        b = induce_form(f, t).b
        parts = range(t.m) if split else [None]
        for k in range(t.r):
            for l in range(t.r):
                for part in parts:
                    coeffs = {}
                    for (i, jj, kk, ll), v in b.items():
                        if kk == k and ll == l:
                            v = v if part is None else t.base_coords(v)[part]
                            if v:
                                coeffs[(i, jj)] = t.frob(v, -k)
                    for w in range(t.m):
                        J = (l - k + t.r * w) % t.degree
                        conj = GeneralTable(f.n, {(i, jj, 0, J): v for (i, jj), v in coeffs.items()}) if coeffs else None
                        self.entries.append(((k, l, w), part, J, conj))

    def check(self, idx: int) -> bool:
        form = self.entries[idx][3]
        if form is None:
            return True
        if form not in self._cache:
            self._cache[form] = selforth_linear(self.code, form, self.tower)
        return self._cache[form]

    def image(self, dual: Sequence[int]) -> Verdict:
        t = self.tower
        ev = []
        sums: dict[int, int] = {}
        for idx, (klw, part, j, _) in enumerate(self.entries):
            if j not in sums:
                sums[j] = power_sum(dual, j, t)
            ps = sums[j]
            ev.append(Evidence(j, ps, None if ps == 0 else self.check(idx), klw, part))
        return Verdict(all(e.ok for e in ev), "image", tuple(ev), tuple(dual))

    def trace(self) -> Verdict:
        ev = [Evidence(j, None, self.check(idx), klw, part) for idx, (klw, part, j, _) in enumerate(self.entries)]
        return Verdict(all(e.ok for e in ev), "trace", tuple(ev))


def _check_l(t: FieldTower, l: int) -> None:
    if not 0 <= l < t.r:
        raise BadRange(f"need 0 <= l < r={t.r}, got {l}")


def image_selforth_hermitian(c: Code, b: Basis | DualBasisPair, l: int) -> Verdict:
    """Im_B(c) self-orthogonal under sum x_i y_i^(p^l)?"""
    _check_l(c.tower, l)
    return ConjugateChecks(c, Hermitian(l)).image(_dual_elems(c, b))


def trace_selforth_hermitian(c: Code, l: int) -> Verdict:
    """Tr(c) self-orthogonal under sum x_i y_i^(p^l)?"""
    _check_l(c.tower, l)
    return ConjugateChecks(c, Hermitian(l)).trace()


def _as_general(c: Code, f: Form) -> GeneralTable:
    if isinstance(f, Hermitian):
        return as_table(f, as_linear(c).n, c.tower)
    return f


def image_selforth_general(c: Code, b: Basis | DualBasisPair, f: Form, split: bool = True) -> Verdict:
    """Im_B(c) self-orthogonal under the form induced by the table f?"""
    return ConjugateChecks(c, _as_general(c, f), split).image(_dual_elems(c, b))


def trace_selforth_general(c: Code, f: Form, split: bool = True) -> Verdict:
    """Tr(c) self-orthogonal under f restricted to GF(q)^n?"""
    return ConjugateChecks(c, _as_general(c, f), split).trace()


def image_selforth(c: Code, b: Basis | DualBasisPair, f: Form) -> Verdict:
    if isinstance(f, Hermitian):
        return image_selforth_hermitian(c, b, f.j % c.tower.r)
    return image_selforth_general(c, b, f)


def trace_selforth(c: Code, f: Form) -> Verdict:
    if isinstance(f, Hermitian):
        return trace_selforth_hermitian(c, f.j % c.tower.r)
    return trace_selforth_general(c, f)


# ---------------------------------------------------------------------------
# special-case shortcuts for the canonical form


class ShortcutKind(enum.Enum):
    IFF = "iff"  # image self-orthogonal <=> code canonically self-orthogonal
    IMPLIES = "implies"  # image self-orthogonal => code canonically self-orthogonal


@dataclass(frozen=True)
class Shortcut:
    rule: str
    kind: ShortcutKind
    code_selforth: bool

    @property
    def forced(self) -> bool | None:
        """The image verdict the rule forces, or None when it leaves it open."""
        if self.kind is ShortcutKind.IFF:
            return self.code_selforth
        return None if self.code_selforth else False

    def agrees_with(self, image_verdict: bool) -> bool:
        return self.forced is None or self.forced == image_verdict


def shortcut_rule(t: FieldTower, b: Basis | DualBasisPair) -> tuple[str, ShortcutKind] | None:
    basis = b.basis if isinstance(b, DualBasisPair) else b
    if t.q == 2 and t.m == 2:
        return "gf4_over_gf2", ShortcutKind.IFF
    if is_self_dual(basis):
        return "self_dual_basis", ShortcutKind.IFF
    if t.p == 2:
        return "even_characteristic", ShortcutKind.IMPLIES
    if t.m == 2 and (t.q - 1) % 4 == 0:
        return "quadratic_1mod4", ShortcutKind.IMPLIES
    return None


def shortcut_verdict(c: Code, b: Basis | DualBasisPair, f: Form | None = None) -> Shortcut | None:
    """The verdict a special-case rule forces for the canonical form, if any."""
    f = canonical() if f is None else f
    if not (isinstance(f, Hermitian) and f.j == 0):
        return None
    rule = shortcut_rule(c.tower, b)
    if rule is None:
        return None
    code = as_linear(c)
    return Shortcut(rule[0], rule[1], selforth_linear(code, canonical(), c.tower))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AllBasesReport:
    per_basis: tuple[tuple[Basis, bool], ...]
    trace: bool
    all_bases: bool
    some_basis: bool
    exception_case: bool  # q = m = 2, where all-bases need not imply trace
    equivalence_holds: bool

    @property
    def count(self) -> int:
        return len(self.per_basis)


def all_bases_report(c: Code, f: Form, ordered: bool = False, bases: Iterable[Basis] | None = None) -> AllBasesReport:
    t = c.tower
    checks = ConjugateChecks(c, f if isinstance(f, Hermitian) else _as_general(c, f))
    pool = enumerate_bases(t, unordered=not ordered) if bases is None else bases
    per = tuple((b, checks.image(dual_basis(b).elems).overall) for b in pool)
    trace = checks.trace().overall
    all_true = all(v for _, v in per)
    exception = t.q == 2 and t.m == 2
    holds = all_true == trace or (exception and all_true and not trace)
    return AllBasesReport(per, trace, all_true, any(v for _, v in per), exception, holds)
