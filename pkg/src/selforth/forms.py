"""Biadditive forms on GF(q^m)^n, their induced forms, and self-orthogonality oracles.

Every biadditive form here is a sum of monomials ``a * x_i^(p^k) * y_j^(p^l)``.
Four spellings are supported:

* ``Hermitian(j)``: sum_i x_i * y_i^(p^j); ``canonical()`` is j = 0.
* ``GeneralTable``: explicit sparse coefficients a[(i, j, k, l)] (0-based i, j).
* ``InducedTable``: coefficients b[(i, j, k, l)], 0 <= k, l < r, evaluated on
  GF(q)^(nm) as a sum over the m blocks of length n.
* ``BlockSum``: the definitional induced form, sum_s f(x_block_s, y_block_s).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

import numpy as np

from . import _limits
from .errors import BadRange, LengthMismatch
from .ff_core import FieldTower

Key = tuple[int, int, int, int]


@dataclass(frozen=True)
class Hermitian:
    j: int = 0
    n: int | None = None


def canonical(n: int | None = None) -> Hermitian:
    return Hermitian(0, n)


def hermitian_kl(t: FieldTower, k: int, l: int, n: int | None = None) -> Hermitian:
    """The form sum x_i y_i^(p^l q^k) as a single Frobenius index."""
    if not 0 <= l < t.r:
        raise BadRange(f"need 0 <= l < r={t.r}, got {l}")
    return Hermitian((l + t.r * k) % t.degree, n)


def _freeze(entries: Mapping[Key, int]) -> tuple[tuple[Key, int], ...]:
    return tuple(sorted((tuple(int(v) for v in key), int(val)) for key, val in entries.items() if val))


@dataclass(frozen=True)
class GeneralTable:
    n: int
    items: tuple[tuple[Key, int], ...]

    def __init__(self, n: int, entries: Mapping[Key, int] | Sequence[tuple[Key, int]]):
        if not isinstance(entries, Mapping):
            acc: dict[Key, int] = {}
            for key, val in entries:
                acc[tuple(key)] = val
            entries = acc
        for i, j, k, l in entries:
            if not (0 <= i < n and 0 <= j < n) or k < 0 or l < 0:
                raise BadRange(f"table index {(i, j, k, l)} out of range for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "items", _freeze(entries))

    @property
    def entries(self) -> dict[Key, int]:
        return dict(self.items)


@dataclass(frozen=True)
class InducedTable:
    n: int
    m: int
    items: tuple[tuple[Key, int], ...]

    def __init__(self, n: int, m: int, b: Mapping[Key, int]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "items", _freeze(b))

    @property
    def b(self) -> dict[Key, int]:
        return dict(self.items)


@dataclass(frozen=True)
class BlockSum:
    form: "Form"
    n: int
    m: int


Form = Union[Hermitian, GeneralTable, InducedTable, BlockSum]


def form_length(f: Form) -> int | None:
    if isinstance(f, Hermitian):
        return f.n
    if isinstance(f, GeneralTable):
        return f.n
    return f.n * f.m


def as_table(f: Hermitian, n: int, t: FieldTower) -> GeneralTable:
    return GeneralTable(n, {(i, i, 0, f.j % t.degree): 1 for i in range(n)})


def _check_lengths(f: Form, x: Sequence[int], y: Sequence[int]) -> None:
    want = form_length(f)
    if len(x) != len(y) or (want is not None and len(x) != want):
        raise LengthMismatch(f"vectors of lengths {len(x)}, {len(y)} for a form on length {want}")


def eval_form(f: Form, x: Sequence[int], y: Sequence[int], t: FieldTower) -> int:
    _check_lengths(f, x, y)
    if isinstance(f, Hermitian):
        return t.sum(t.mul(a, t.frob(b, f.j)) for a, b in zip(x, y))
    if isinstance(f, GeneralTable):
        return t.sum(t.mul(c, t.mul(t.frob(x[i], k), t.frob(y[j], l))) for (i, j, k, l), c in f.items)
    if isinstance(f, InducedTable):
        n = f.n
        return t.sum(
            t.mul(c, t.mul(t.frob(x[s * n + i], k), t.frob(y[s * n + j], l)))
            for s in range(f.m)
            for (i, j, k, l), c in f.items
        )
    if isinstance(f, BlockSum):
        n = f.n
        return t.sum(eval_form(f.form, x[s * n : (s + 1) * n], y[s * n : (s + 1) * n], t) for s in range(f.m))
    raise TypeError(f"not a form: {f!r}")


def eval_induced(fi: Form, x: Sequence[int], y: Sequence[int], t: FieldTower) -> int:
    """Evaluate an induced form on GF(q)^(nm) vectors."""
    return eval_form(fi, x, y, t)


def induce_form(f: Form, t: FieldTower) -> Form:
    """The induced form on GF(q)^(nm), via b_ijkl = sum_{u,v} a_ij(k+ur)(l+vr)."""
    r, m = t.r, t.m
    if isinstance(f, Hermitian):
        return Hermitian(f.j % r, None if f.n is None else f.n * m)
    if isinstance(f, GeneralTable):
        b: dict[Key, int] = {}
        for (i, j, k, l), c in f.items:
            k, l = k % t.degree, l % t.degree
            key = (i, j, k % r, l % r)
            b[key] = t.add(b.get(key, 0), c)
        return InducedTable(f.n, m, b)
    raise BadRange("only forms on GF(q^m)^n can be induced")


def block_sum(f: Form, t: FieldTower) -> BlockSum:
    n = form_length(f)
    if n is None:
        raise BadRange("block sum needs a form of fixed length")
    return BlockSum(f, n, t.m)


def restricted_table(f: GeneralTable, t: FieldTower) -> InducedTable:
    """f restricted to GF(q)^n, written with exponents below r."""
    fi = induce_form(f, t)
    return InducedTable(fi.n, 1, fi.b)


# ---------------------------------------------------------------------------
# structure used by the oracles


def scalar_law_index(f: Form) -> int | None:
    """J with f(lx, my) = l * m^(p^J) * f(x, y) for every scalar, if the form has one."""
    if isinstance(f, Hermitian):
        return f.j
    if isinstance(f, GeneralTable) and f.items:
        ks = {k for (_, _, k, _), _ in f.items}
        ls = {l for (_, _, _, l), _ in f.items}
        if ks == {0} and len(ls) == 1:
            return ls.pop()
    return None


def _unit_value(f: Form, t: FieldTower, i: int, a: int, j: int, b: int) -> int:
    """f(a e_i, b e_j)."""
    if isinstance(f, Hermitian):
        return t.mul(a, t.frob(b, f.j)) if i == j else 0
    if isinstance(f, GeneralTable):
        return t.sum(t.mul(c, t.mul(t.frob(a, k), t.frob(b, l))) for (ii, jj, k, l), c in f.items if ii == i and jj == j)
    if isinstance(f, InducedTable):
        n = f.n
        if i // n != j // n:
            return 0
        i, j = i % n, j % n
        return t.sum(t.mul(c, t.mul(t.frob(a, k), t.frob(b, l))) for (ii, jj, k, l), c in f.items if ii == i and jj == j)
    if isinstance(f, BlockSum):
        n = f.n
        if i // n != j // n:
            return 0
        return _unit_value(f.form, t, i % n, a, j % n, b)
    raise TypeError(f"not a form: {f!r}")


def _coupled(f: Form, length: int) -> Iterator[tuple[int, int]]:
    if isinstance(f, Hermitian):
        for i in range(length):
            yield i, i
    elif isinstance(f, GeneralTable):
        yield from sorted({(i, j) for (i, j, _, _), _ in f.items})
    elif isinstance(f, InducedTable):
        pairs = sorted({(i, j) for (i, j, _, _), _ in f.items})
        for s in range(f.m):
            for i, j in pairs:
                yield s * f.n + i, s * f.n + j
    elif isinstance(f, BlockSum):
        inner = list(_coupled(f.form, f.n))
        for s in range(f.m):
            for i, j in inner:
                yield s * f.n + i, s * f.n + j
    else:
        raise TypeError(f"not a form: {f!r}")


def bilinear_matrices(f: Form, t: FieldTower, length: int, ndigits: int) -> np.ndarray:
    """Digit matrices M[d] with digit d of f(x, y) = X^T M[d] Y over GF(p).

    X, Y are the base-p digit vectors of x, y (``ndigits`` per coordinate),
    which are GF(p)-coordinates w.r.t. the monomial basis.  ``ndigits = r``
    is valid for vectors over GF(q).
    """
    lam = [t.p**e for e in range(ndigits)]
    size = length * ndigits
    mats = np.zeros((t.degree, size, size), dtype=np.int64)
    for i, j in _coupled(f, length):
        for ea, a in enumerate(lam):
            for eb, b in enumerate(lam):
                v = _unit_value(f, t, i, a, j, b)
                if v:
                    mats[:, i * ndigits + ea, j * ndigits + eb] = t.digits(np.array(v), t.degree)
    return mats


def _pair_matrix_zero(dx: np.ndarray, dy: np.ndarray, mats: np.ndarray, p: int) -> bool:
    chunk = max(1, (1 << 22) // max(1, dy.shape[0]))
    dyt = dy.T.astype(np.float64)
    for d in range(mats.shape[0]):
        md = mats[d].astype(np.float64)
        if not md.any():
            continue
        for start in range(0, dx.shape[0], chunk):
            left = np.mod(dx[start : start + chunk].astype(np.float64) @ md, p)
            if np.mod(left @ dyt, p).any():
                return False
    return True


def selforth_bruteforce(
    codewords: np.ndarray | Sequence[Sequence[int]],
    f: Form,
    t: FieldTower,
    method: str = "matrix",
) -> bool:
    """True iff f(x, y) = 0 for every ordered pair of the given vectors."""
    words = np.asarray(codewords, dtype=np.int64)
    if words.size == 0:
        return True
    words = words.reshape(words.shape[0], -1)
    k, length = words.shape
    _limits.check("codeword pairs", k * k, _limits.MAX_PAIRS)
    want = form_length(f)
    if want is not None and want != length:
        raise LengthMismatch(f"codewords of length {length} for a form on length {want}")
    if method == "direct":
        rows = [tuple(int(v) for v in w) for w in words]
        return all(eval_form(f, x, y, t) == 0 for x in rows for y in rows)
    if method != "matrix":
        raise BadRange(f"unknown method {method!r}")
    ndigits = t.r if int(words.max()) < t.q else t.degree
    mats = bilinear_matrices(f, t, length, ndigits)
    digits = t.digits(words, ndigits).reshape(k, -1)
    return _pair_matrix_zero(digits, digits, mats, t.p)


def selforth_pairs(left: Sequence[Sequence[int]], right: Sequence[Sequence[int]], f: Form, t: FieldTower) -> bool:
    return all(eval_form(f, x, y, t) == 0 for x in left for y in right)


def selforth_linear(c, f: Form, t: FieldTower | None = None) -> bool:
    """Self-orthogonality of a linear (or scalable) code via a spanning set.

    Forms with a scalar law only need generator (or representative) pairs;
    other forms need pairs from a GF(p)-spanning set, and scalable codes
    without a scalar law fall back to all codeword pairs.
    """
    from .codes import LinearCode, ScalableCode, as_linear

    c = as_linear(c)
    t = c.tower if t is None else t
    if isinstance(c, ScalableCode):
        if scalar_law_index(f) is not None:
            return selforth_pairs(c.reps, c.reps, f, t)
        return selforth_bruteforce(c.codewords(), f, t)
    if not isinstance(c, LinearCode):
        raise TypeError("expected a code")
    if scalar_law_index(f) is not None:
        span = list(c.gens)
    else:
        span = c.spanning_set_gfp()
    return selforth_pairs(span, span, f, t)


def random_table(t: FieldTower, n: int, rng: np.random.Generator, density: float = 0.3) -> GeneralTable:
    entries = {}
    for i, j in itertools.product(range(n), repeat=2):
        for k, l in itertools.product(range(t.degree), repeat=2):
            if rng.random() < density / t.degree:
                entries[(i, j, k, l)] = t.random(rng, nonzero=True)
    return GeneralTable(n, entries)


def zero_map_form(t: FieldTower, n: int) -> GeneralTable:
    """sum x_i y_i + x_i y_i^q: its induced form vanishes for even q."""
    entries: dict[Key, int] = {}
    for i in range(n):
        entries[(i, i, 0, 0)] = 1
        key = (i, i, 0, t.r % t.degree)
        entries[key] = t.add(entries.get(key, 0), 1)
    return GeneralTable(n, entries)
