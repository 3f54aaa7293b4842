"""Linear, scalable and cyclic codes over a tower, their q-ary images and traces.

Vectors are tuples of integer element codes.  A code's ``over`` attribute is
``"ext"`` for codes over GF(q^m) and ``"base"`` for codes over GF(q).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from . import _limits
from .basis_lab import Basis, DualBasisPair, dual_basis
from .errors import BadRange, BadSet, EmptyCode, LengthMismatch, NotCoprime, TowerMismatch
from .ff_core import FieldTower
from .linalg import nullspace, rank, rref

Vector = tuple[int, ...]


def _field_size(t: FieldTower, over: str) -> int:
    if over not in ("ext", "base"):
        raise BadRange(f"over must be 'ext' or 'base', got {over!r}")
    return t.order if over == "ext" else t.q


def _check_entries(t: FieldTower, rows: Iterable[Sequence[int]], over: str, n: int) -> None:
    size = _field_size(t, over)
    for row in rows:
        if len(row) != n:
            raise LengthMismatch(f"vector of length {len(row)} in a length-{n} code")
        if any(not 0 <= x < size for x in row):
            raise TowerMismatch(f"entry outside GF({size})")


@dataclass(frozen=True)
class LinearCode:
    """Row space of a generator matrix; ``gens`` is kept in reduced echelon form."""

    tower: FieldTower = field(repr=False)
    gens: tuple[Vector, ...]
    n: int
    over: str = "ext"

    def __init__(self, tower: FieldTower, gens: Sequence[Sequence[int]], n: int | None = None, over: str = "ext"):
        gens = [tuple(int(x) for x in g) for g in gens]
        if n is None:
            if not gens:
                raise LengthMismatch("length must be given for a code without generators")
            n = len(gens[0])
        _check_entries(tower, gens, over, n)
        red = rref(gens, tower)[0] if gens else []
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "gens", tuple(tuple(r) for r in red))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "over", over)

    @property
    def k(self) -> int:
        return len(self.gens)

    @property
    def field_size(self) -> int:
        return _field_size(self.tower, self.over)

    def size(self) -> int:
        return self.field_size**self.k

    def codewords(self) -> np.ndarray:
        """All codewords as an array of shape (field_size**k, n)."""
        t = self.tower
        _limits.check("codewords", self.size(), _limits.MAX_CODEWORDS)
        words = np.zeros((1, self.n), dtype=np.int64)
        scalars = np.arange(self.field_size, dtype=np.int64)
        for g in self.gens:
            multiples = t.vmul(scalars[:, None], np.asarray(g, dtype=np.int64)[None, :])
            words = t.vadd(words[:, None, :], multiples[None, :, :]).reshape(-1, self.n)
        return words

    def contains(self, v: Sequence[int]) -> bool:
        return rank([*self.gens, tuple(v)], self.tower) == self.k

    def spanning_set_gfp(self) -> list[Vector]:
        """GF(p)-spanning set {lambda * g_i} with lambda over a GF(p)-basis."""
        t = self.tower
        lams = t.gfp_basis(over_base=self.over == "base")
        return [tuple(t.mul(lam, x) for x in g) for g in self.gens for lam in lams]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and other.tower is self.tower
            and other.over == self.over
            and other.n == self.n
            and other.gens == self.gens
        )

    def __hash__(self) -> int:
        return hash((id(self.tower), self.over, self.n, self.gens))


@dataclass(frozen=True)
class ScalableCode:
    """The union of the lines {lambda * v} through the given representatives."""

    tower: FieldTower = field(repr=False)
    reps: tuple[Vector, ...]
    n: int
    over: str = "ext"

    def __init__(self, tower: FieldTower, reps: Sequence[Sequence[int]], n: int | None = None, over: str = "ext"):
        reps = [tuple(int(x) for x in v) for v in reps]
        if n is None:
            if not reps:
                raise LengthMismatch("length must be given for a code without representatives")
            n = len(reps[0])
        _check_entries(tower, reps, over, n)
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "reps", tuple(v for v in reps if any(v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "over", over)

    @property
    def field_size(self) -> int:
        return _field_size(self.tower, self.over)

    def codewords(self) -> np.ndarray:
        t = self.tower
        _limits.check("codewords", self.field_size * max(1, len(self.reps)), _limits.MAX_CODEWORDS)
        out = [np.zeros((1, self.n), dtype=np.int64)]
        if self.reps:
            scalars = np.arange(1, self.field_size, dtype=np.int64)
            reps = np.asarray(self.reps, dtype=np.int64)
            out.append(t.vmul(scalars[:, None, None], reps[None, :, :]).reshape(-1, self.n))
        return np.unique(np.concatenate(out), axis=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalableCode) or other.tower is not self.tower or other.n != self.n or other.over != self.over:
            return False
        return np.array_equal(self.codewords(), other.codewords())

    def __hash__(self) -> int:
        return hash((id(self.tower), self.over, self.n, self.codewords().tobytes()))


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic code of length n | q^m - 1 over GF(q^m) given by its zero set."""

    tower: FieldTower = field(repr=False)
    n: int
    zero_set: frozenset[int]

    def __init__(self, tower: FieldTower, n: int, zero_set: Iterable[int] | None = None, nonzero_set: Iterable[int] | None = None):
        if n < 1 or (tower.order - 1) % n:
            raise BadRange(f"n={n} does not divide {tower.order - 1}")
        if (zero_set is None) == (nonzero_set is None):
            raise BadSet("give exactly one of zero_set and nonzero_set")
        given = [int(i) for i in (zero_set if zero_set is not None else nonzero_set)]
        if any(not 0 <= i < n for i in given):
            raise BadSet(f"exponents must lie in 0..{n - 1}")
        z = frozenset(given) if zero_set is not None else frozenset(range(n)) - frozenset(given)
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "zero_set", z)

    @property
    def nonzero_set(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.zero_set

    @property
    def alpha(self) -> int:
        return self.tower.power_of_primitive((self.tower.order - 1) // self.n)

    @property
    def k(self) -> int:
        return self.n - len(self.zero_set)

    def generator_poly(self) -> list[int]:
        """Coefficients of prod_{i in Z} (x - alpha^i), constant term first."""
        t = self.tower
        g = [1]
        for i in sorted(self.zero_set):
            root = t.pow(self.alpha, i)
            shifted = [0] + g
            scaled = [t.mul(root, c) for c in g] + [0]
            g = [t.sub(a, b) for a, b in zip(shifted, scaled)]
        return g


Code = Union[LinearCode, ScalableCode, CyclicCode]


def cyclotomic_cosets(n: int, q: int) -> list[tuple[int, ...]]:
    """Orbits of Z_n under multiplication by q, each listed as s, sq, sq^2, ..."""
    if n < 1:
        raise BadRange("n must be positive")
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    seen: set[int] = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        orbit = [s]
        x = s * q % n
        while x != s:
            orbit.append(x)
            x = x * q % n
        seen.update(orbit)
        out.append(tuple(orbit))
    return out


def cyclic_to_linear(c: CyclicCode) -> LinearCode:
    g = c.generator_poly()
    rows = [tuple([0] * s + g + [0] * (c.n - len(g) - s)) for s in range(c.k)]
    return LinearCode(c.tower, rows, n=c.n)


def as_linear(c: Code) -> LinearCode | ScalableCode:
    return cyclic_to_linear(c) if isinstance(c, CyclicCode) else c


def codewords(c: Code) -> np.ndarray:
    return as_linear(c).codewords()


def _image_coeffs(b: Basis | DualBasisPair) -> tuple[int, ...]:
    return b.dual.elems if isinstance(b, DualBasisPair) else dual_basis(b).elems


def expand_vector(v: Sequence[int], coeffs: Sequence[int], t: FieldTower) -> Vector:
    """Blocks (Tr(c * v_1), ..., Tr(c * v_n)) for c in coeffs, concatenated."""
    return tuple(t.trace(t.mul(c, x)) for c in coeffs for x in v)


def expand_array(words: np.ndarray, coeffs: Sequence[int], t: FieldTower) -> np.ndarray:
    """Vectorised expand_vector over the rows of a codeword array."""
    blocks = []
    for c in coeffs:
        prod = t.vmul(np.full_like(words, c), words)
        acc = prod
        for i in range(1, t.m):
            acc = t.vadd(acc, t.vfrob(prod, i * t.r))
        blocks.append(acc)
    return np.concatenate(blocks, axis=-1) if blocks else words[:, :0]


def _expand_code(c: Code, coeffs: Sequence[int]) -> LinearCode | ScalableCode:
    t = c.tower
    c = as_linear(c)
    if c.over != "ext":
        raise TowerMismatch("imaging needs a code over GF(q^m)")
    n_out = c.n * len(coeffs)
    if isinstance(c, LinearCode):
        rows = [expand_vector([t.mul(beta, x) for x in g], coeffs, t) for g in c.gens for beta in t.gfp_basis()]
        return LinearCode(t, rows, n=n_out, over="base")
    # one scalar per GF(q)-line of GF(q^m) covers every orbit
    lines = [t.power_of_primitive(i) for i in range((t.order - 1) // (t.q - 1))]
    reps = [expand_vector([t.mul(lam, x) for x in v], coeffs, t) for v in c.reps for lam in lines]
    return ScalableCode(t, reps, n=n_out, over="base")


def image_code(c: Code, b: Basis | DualBasisPair) -> LinearCode | ScalableCode:
    """Im_B(c) over GF(q), coordinates in block order (one block per dual element)."""
    basis = b.basis if isinstance(b, DualBasisPair) else b
    if basis.tower is not c.tower:
        raise TowerMismatch("basis and code live in different towers")
    return _expand_code(c, _image_coeffs(b))


def trace_code(c: Code) -> LinearCode | ScalableCode:
    return _expand_code(c, (1,))


def dual_code(c: LinearCode | CyclicCode) -> LinearCode | CyclicCode:
    """Annihilator under the canonical inner product."""
    if isinstance(c, CyclicCode):
        return CyclicCode(c.tower, c.n, zero_set={(-s) % c.n for s in c.nonzero_set})
    if not isinstance(c, LinearCode):
        raise BadRange("dual of a non-linear code")
    return LinearCode(c.tower, nullspace(list(c.gens), c.n, c.tower), n=c.n, over=c.over)


def weights(words: np.ndarray) -> np.ndarray:
    return np.count_nonzero(words, axis=-1)


def min_distance_bruteforce(c: Code) -> int:
    c = as_linear(c)
    if (isinstance(c, LinearCode) and c.k == 0) or (isinstance(c, ScalableCode) and not c.reps):
        raise EmptyCode("code has no nonzero codeword")
    w = weights(c.codewords())
    return int(w[w > 0].min())


def dual_distance_by_columns(c: LinearCode | CyclicCode) -> int:
    """Minimum distance of the dual: the fewest linearly dependent columns of c's generators."""
    c = as_linear(c)
    t = c.tower
    cols = list(zip(*c.gens)) if c.gens else [() for _ in range(c.n)]
    if any(not any(col) for col in cols):
        return 1
    for w in range(2, c.k + 2):
        for subset in itertools.combinations(range(c.n), w):
            if rank([cols[i] for i in subset], t) < w:
                return w
        if w > c.k:
            break
    raise EmptyCode("dual code is zero")


def bch_bound(zset: Iterable[int], n: int) -> int:
    """1 + longest run of cyclically consecutive residues inside zset."""
    z = {int(s) % n for s in zset}
    if len(z) == n:
        return n + 1
    best = 0
    for s in z:
        if (s - 1) % n in z:
            continue
        run = 1
        while (s + run) % n in z:
            run += 1
        best = max(best, run)
    return best + 1


def cyclic_trace_zero_set(c: CyclicCode) -> tuple[frozenset[int], frozenset[int]]:
    """(Z^c, S^c) of Tr(c): S^c is the union of q-cosets meeting S."""
    sc = set()
    for coset in cyclotomic_cosets(c.n, c.tower.q):
        if c.nonzero_set.intersection(coset):
            sc.update(coset)
    sc = frozenset(sc)
    return frozenset(range(c.n)) - sc, sc


def zero_set_of(code: LinearCode, n: int | None = None) -> frozenset[int]:
    """Exponents i with g(alpha^i) = 0 for every generator g (alpha of order n)."""
    t = code.tower
    n = code.n if n is None else n
    alpha = t.power_of_primitive((t.order - 1) // n)
    if not code.gens:
        return frozenset(range(n))
    alpha_pows = np.array([t.pow(alpha, e) for e in range(n)], dtype=np.int64)
    vander = alpha_pows[np.outer(np.arange(n), np.arange(code.n)) % n]
    g = np.asarray(code.gens, dtype=np.int64)
    vals = t.vsum(t.vmul(g[:, None, :], vander[None, :, :]), axis=-1)
    return frozenset(int(i) for i in np.flatnonzero(~vals.any(axis=0)))
