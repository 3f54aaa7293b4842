"""Cyclic zero-set conditions and quantum codes from Hermitian self-orthogonal images.

A cyclic code C of length n over GF(4^m) with nonzero set S has a GF(4)-image
self-orthogonal under sum x_i y_i^2 when -2*4^k*S is inside the zero set Z for
every k whose dual-basis power sum at exponent 1 + 2*4^k is nonzero.  Such an
image of dimension m|S| gives an [[mn, mn - 2m|S|, d]] quantum code with
d >= d(C^perp) >= |S| + 1 when S = {1..delta} (BCH bound).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .basis_lab import Basis, PowerSumProfile, enumerate_bases, power_sum_profile
from .codes import CyclicCode, bch_bound, cyclic_trace_zero_set
from .errors import BadRange, BadSet, ConditionNotMet
from .ff_core import FieldTower, default_tower

HERMITIAN_L = 1  # sum x y^2 over GF(4): p = 2, r = 2, l = 1


def _check_subset(n: int, s: Iterable[int]) -> frozenset[int]:
    out = frozenset(int(x) for x in s)
    if any(not 0 <= x < n for x in out):
        raise BadSet(f"set must lie in 0..{n - 1}")
    return out


def cyclic_hermitian_selforth(n: int, Z: Iterable[int], j: int, p: int = 2) -> bool:
    """Cyclic code with zero set Z self-orthogonal under sum x_i y_i^(p^j)?

    True iff -p^j * S is inside Z, S the nonzero set.
    """
    z = _check_subset(n, Z)
    mult = -pow(p, j, n) % n if n > 1 else 0
    return all((mult * s) % n in z for s in range(n) if s not in z)


def _gate_indices(t: FieldTower, l: int) -> list[int]:
    return [(l + t.r * k) % t.degree for k in range(t.m)]


def image_condition_cyclic(n: int, S: Iterable[int], profile: PowerSumProfile, l: int = HERMITIAN_L) -> bool:
    """Image of the cyclic code (nonzero set S) under profile.dual is Hermitian self-orthogonal?"""
    t = profile.dual.tower
    s = _check_subset(n, S)
    z = frozenset(range(n)) - s
    return all(
        cyclic_hermitian_selforth(n, z, j, t.p) for j in _gate_indices(t, l) if profile.sums[j] != 0
    )


def trace_condition_cyclic(n: int, S: Iterable[int], t: FieldTower, l: int = HERMITIAN_L) -> bool:
    """Trace code is Hermitian self-orthogonal: -p^l * S^c inside Z^c."""
    s = _check_subset(n, S)
    zc, _ = cyclic_trace_zero_set(CyclicCode(t, n, nonzero_set=s))
    return cyclic_hermitian_selforth(n, zc, l, t.p)


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d: int
    n0: int
    m: int
    S: tuple[int, ...]
    basis_label: str
    dual: tuple[str, ...] | None = None
    vanishing: tuple[int, ...] | None = None
    conditions: tuple[str, ...] = field(default=())
    consecutive: bool = True

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "n0": self.n0,
            "m": self.m,
            "S": list(self.S),
            "basis": self.basis_label,
            "dual": None if self.dual is None else list(self.dual),
            "vanishing": None if self.vanishing is None else list(self.vanishing),
            "conditions": list(self.conditions),
            "consecutive": self.consecutive,
        }


def _is_consecutive_from_one(s: frozenset[int]) -> bool:
    return s == frozenset(range(1, len(s) + 1))


def quantum_params(
    n0: int,
    S: Iterable[int],
    m: int,
    basis_label: str = "All",
    dual: Basis | None = None,
) -> QuantumParams:
    """[[m*n0, m*n0 - 2m|S|, d]] for the cyclic code with nonzero set S over GF(4^m).

    ``basis_label == "All"`` asks for the trace condition; otherwise ``dual``
    (the dual basis B') must satisfy the image condition.  d is the BCH bound
    on the dual code, which equals |S| + 1 for S = {1..delta}.
    """
    t = default_tower(4, m)
    if (t.order - 1) % n0:
        raise BadRange(f"n0={n0} does not divide {t.order - 1}")
    s = _check_subset(n0, S)
    anti = {(-x) % n0 for x in s}  # zero set of the dual code is -S
    d = bch_bound(anti, n0)
    if basis_label == "All":
        if not trace_condition_cyclic(n0, s, t):
            raise ConditionNotMet(f"trace condition fails for S={sorted(s)}")
        conds, dual_str, vanish = ("trace",), None, None
    else:
        if dual is None:
            raise BadRange("a dual basis is needed unless the basis label is 'All'")
        prof = power_sum_profile(dual)
        if not image_condition_cyclic(n0, s, prof):
            raise ConditionNotMet(f"image condition fails for S={sorted(s)} and {basis_label}")
        conds = ("image",)
        dual_str = tuple(dual.format())
        vanish = tuple(sorted(prof.vanishing))
    nq = m * n0
    return QuantumParams(nq, nq - 2 * m * len(s), d, n0, m, tuple(sorted(s)), basis_label, dual_str, vanish, conds, _is_consecutive_from_one(s))


def reference_pool(m: int) -> list[tuple[str, Basis]]:
    """The two dual bases of GF(64)/GF(4) used for the length-7 and length-63 families."""
    if m != 3:
        return []
    t = default_tower(4, 3)
    a = t.primitive
    return [
        ("B'1", Basis(t, (1, t.pow(a, 3), t.pow(a, 15)))),
        ("B'2", Basis(t, (1, a, t.pow(a, 5)))),
    ]


def profile_pool(m: int, l: int = HERMITIAN_L) -> list[tuple[str, Basis]]:
    """One dual basis for each distinct vanishing pattern of the gated power sums."""
    t = default_tower(4, m)
    gates = _gate_indices(t, l)
    seen: dict[frozenset[int], Basis] = {}
    for b in enumerate_bases(t, unordered=True):
        prof = power_sum_profile(b)
        key = frozenset(j for j in gates if j in prof.vanishing)
        if key and key not in seen:
            seen[key] = b
    ordered = sorted(seen.items(), key=lambda kv: sorted(kv[0]))
    return [("V{" + ",".join(map(str, sorted(k))) + "}", b) for k, b in ordered]


def search_table(m: int, n0: int, pool: Sequence[tuple[str, Basis]] | None = None) -> list[QuantumParams]:
    """Quantum codes from S = {1..delta}, delta = 1, 2, ... while some condition holds.

    A row "All" is emitted when the trace condition holds (then every basis
    works); otherwise one row per pool basis meeting the image condition.
    Both conditions only get harder as delta grows, so the search stops at
    the first delta with no row.
    """
    t = default_tower(4, m)
    if (t.order - 1) % n0:
        raise BadRange(f"n0={n0} does not divide {t.order - 1}")
    pool = reference_pool(m) if pool is None else list(pool)
    profiles = [(label, b, power_sum_profile(b)) for label, b in pool]
    rows: list[QuantumParams] = []
    for delta in range(1, n0):
        s = frozenset(range(1, delta + 1))
        if trace_condition_cyclic(n0, s, t):
            rows.append(quantum_params(n0, s, m, "All"))
            continue
        found = [quantum_params(n0, s, m, label, b) for label, b, prof in profiles if image_condition_cyclic(n0, s, prof)]
        if not found:
            break
        rows.extend(found)
    return sorted(rows, key=lambda r: (r.n0, len(r.S), r.basis_label))


def format_table(rows: Sequence[QuantumParams]) -> str:
    head = f"{'n':>5} {'k':>5} {'d':>3}  {'S':<12} basis"
    lines = [head]
    for r in rows:
        sset = "{" + ",".join(map(str, r.S)) + "}" if len(r.S) <= 3 else f"{{1..{max(r.S)}}}" if r.consecutive else str(list(r.S))
        lines.append(f"{r.n:>5} {r.k:>5} {r.d:>3}  {sset:<12} {r.basis_label}")
    return "\n".join(lines)
