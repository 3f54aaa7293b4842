"""Exact arithmetic in a field tower GF(p) < GF(q) < GF(q^m), q = p^r.

Elements of every level are plain integers: the base-p digits of an integer
are the polynomial coordinates of the element, the lowest r digits being the
constant GF(q) coefficient over the outer generator ``y`` and so on.  With this
encoding GF(q) is exactly ``range(q)`` and GF(p) is ``range(p)``.

Fields with at most ``TABLE_LIMIT`` elements get discrete-log / Zech tables
built from the tower's primitive element; larger fields fall back to
polynomial arithmetic.
"""

from __future__ import annotations

import functools
import json
import re
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DegreeZero,
    FieldDivisionByZero,
    NotPrime,
    ParseError,
    ReducibleModulus,
    SelforthError,
    TowerMismatch,
)

TABLE_LIMIT = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, r) with q = p**r, or raise NotPrime."""
    for p in prime_factors(q) if q > 1 else []:
        r, t = 0, q
        while t % p == 0:
            t //= p
            r += 1
        if t == 1:
            return p, r
        break
    raise NotPrime(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# coefficient fields and polynomials (coefficient lists, constant term first)


class _PrimeField:
    def __init__(self, p: int):
        self.p = p
        self.size = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise FieldDivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], F) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def _poly_mod(a: Sequence[int], b: Sequence[int], F) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    lead_inv = F.inv(b[-1])
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = F.mul(a[-1], lead_inv)
        shift = len(a) - 1 - db
        for i, y in enumerate(b):
            if y:
                a[shift + i] = F.sub(a[shift + i], F.mul(c, y))
        _trim(a)
    return a


def _monic_polys(F, degree: int) -> Iterator[list[int]]:
    """All monic polynomials of the given degree over F, in increasing encoding."""
    for low in range(F.size**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(low % F.size)
            low //= F.size
        yield coeffs + [1]


def _is_irreducible(f: Sequence[int], F) -> bool:
    d = len(f) - 1
    for e in range(1, d // 2 + 1):
        for g in _monic_polys(F, e):
            if not _poly_mod(f, g, F):
                return False
    return True


class _PolyField:
    """GF(s^d) as polynomials of degree < d over a coefficient field of size s."""

    def __init__(self, base, modulus: Sequence[int]):
        self.base = base
        self.p = base.p
        self.s = base.size
        self.modulus = tuple(modulus)
        self.d = len(modulus) - 1
        self.size = self.s**self.d
        self.exp: list[int] | None = None
        self.log: list[int] | None = None
        self.zech: list[int] | None = None

    def vec(self, a: int) -> list[int]:
        out = []
        for _ in range(self.d):
            out.append(a % self.s)
            a //= self.s
        return out

    def unvec(self, v: Sequence[int]) -> int:
        a = 0
        for c in reversed(v):
            a = a * self.s + c
        return a

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if self.zech is not None:
            la, lb = self.log[a], self.log[b]
            z = self.zech[(lb - la) % (self.size - 1)]
            return 0 if z < 0 else self.exp[la + z]
        return self.unvec([self.base.add(x, y) for x, y in zip(self.vec(a), self.vec(b))])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.unvec([self.base.neg(x) for x in self.vec(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.log is not None:
            return self.exp[self.log[a] + self.log[b]]
        return self.mul_poly(a, b)

    def mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul(self.vec(a), self.vec(b), self.base)
        if len(prod) > self.d:
            prod = _poly_mod(prod, self.modulus, self.base)
        return self.unvec(prod + [0] * (self.d - len(prod)))

    def inv(self, a: int) -> int:
        if not a:
            raise FieldDivisionByZero("inverse of zero")
        if self.log is not None:
            return self.exp[(self.size - 1 - self.log[a]) % (self.size - 1)]
        return self.pow(a, self.size - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if not a:
            return 0
        if self.log is not None:
            return self.exp[self.log[a] * e % (self.size - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul_poly(result, base)
            base = self.mul_poly(base, base)
            e >>= 1
        return result

    def has_order(self, g: int, order: int) -> bool:
        if self.pow(g, order) != 1:
            return False
        return all(self.pow(g, order // f) != 1 for f in prime_factors(order))

    def accelerate(self, g: int) -> None:
        M = self.size - 1
        exp = [0] * (2 * M)
        log = [0] * self.size
        x = 1
        for i in range(M):
            exp[i] = x
            log[x] = i
            x = self.mul_poly(x, g)
        exp[M:] = exp[:M]
        if self.p != 2:
            # log(1 + g^i), -1 where 1 + g^i = 0
            zech = [0] * M
            for i in range(M):
                t = self.unvec([self.base.add(x, y) for x, y in zip(self.vec(1), self.vec(exp[i]))])
                zech[i] = -1 if t == 0 else log[t]
            self.zech = zech
        self.exp, self.log = exp, log


def _as_int_poly(poly: Sequence[int], p: int) -> list[int]:
    return [int(c) % p for c in poly]


# ---------------------------------------------------------------------------


class FieldTower:
    """The chain GF(p) < GF(q) < GF(q^m) with validated moduli.

    Parameters
    ----------
    p : int
        Characteristic.
    inner_modulus : sequence of int
        Monic irreducible degree-r polynomial over GF(p), constant term first.
    outer_modulus : sequence
        Monic irreducible degree-m polynomial over GF(q), constant term first.
        Each coefficient is a GF(q) element given as an integer code or as a
        list of r GF(p) digits.
    primitive : element, optional
        Generator of GF(q^m)^*; found by search when omitted.
    """

    def __init__(self, p: int, inner_modulus: Sequence[int], outer_modulus: Sequence[Any], primitive: Any = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        inner = _trim(_as_int_poly(inner_modulus, p))
        if len(inner) < 2:
            raise DegreeZero("inner modulus must have degree >= 1")
        if inner[-1] != 1:
            raise SelforthError("inner modulus must be monic")
        gfp = _PrimeField(p)
        if not _is_irreducible(inner, gfp):
            raise ReducibleModulus(f"inner modulus {inner} is reducible over GF({p})")
        self.p = p
        self.r = len(inner) - 1
        self.q = p**self.r
        self.inner_modulus = tuple(inner)
        self._inner = _PolyField(gfp, inner)
        if self.q > 2:
            g = next(x for x in range(2, self.q) if self._inner.has_order(x, self.q - 1))
            self._inner.accelerate(g)

        outer = []
        for c in outer_modulus:
            if isinstance(c, (list, tuple)):
                c = self._inner.unvec(_as_int_poly(c, p) + [0] * (self.r - len(c)))
            c = int(c)
            if not 0 <= c < self.q:
                raise SelforthError(f"outer modulus coefficient {c} is not in GF({self.q})")
            outer.append(c)
        outer = _trim(outer)
        if len(outer) < 2:
            raise DegreeZero("outer modulus must have degree >= 1")
        if outer[-1] != 1:
            raise SelforthError("outer modulus must be monic")
        if not _is_irreducible(outer, self._inner):
            raise ReducibleModulus(f"outer modulus {outer} is reducible over GF({self.q})")
        self.m = len(outer) - 1
        self.outer_modulus = tuple(outer)
        self.degree = self.r * self.m
        self.order = self.q**self.m
        self._top = _PolyField(self._inner, outer)

        if primitive is None:
            primitive = _search_primitive(self._top)
        else:
            primitive = self._parse_without_tables(primitive)
            if not self._top.has_order(primitive, self.order - 1) and self.order > 2:
                raise SelforthError("given primitive element does not generate the multiplicative group")
        self.primitive = primitive
        self.has_tables = self.order <= TABLE_LIMIT
        if self.has_tables:
            self._top.accelerate(primitive)
            M = self.order - 1
            exp_ext = np.zeros(4 * M + 3, dtype=np.int64)
            exp_ext[: 2 * M] = np.asarray(self._top.exp, dtype=np.int64)
            log = np.asarray(self._top.log, dtype=np.int64)
            log[0] = 2 * M + 1
            self._exp_np = exp_ext
            self._log_np = log
            self.zech_table = None if self._top.zech is None else np.asarray(self._top.zech)
        else:
            self.zech_table = None
        self._p_powers = [pow(p, j, self.order - 1) if self.order > 2 else 1 for j in range(self.degree)]
        self._frob_np: dict[int, np.ndarray] = {}
        self._digits_np: np.ndarray | None = None

    # -- description ------------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldTower(GF({self.order}) over GF({self.q}), p={self.p})"

    def describe(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "m": self.m,
            "q": self.q,
            "order": self.order,
            "inner_modulus": list(self.inner_modulus),
            "outer_modulus": list(self.outer_modulus),
            "primitive": self.coords(self.primitive),
        }

    # -- scalar arithmetic on integer codes -------------------------------

    def add(self, a: int, b: int) -> int:
        return self._top.add(a, b)

    def sub(self, a: int, b: int) -> int:
        return self._top.sub(a, b)

    def neg(self, a: int) -> int:
        return self._top.neg(a)

    def mul(self, a: int, b: int) -> int:
        return self._top.mul(a, b)

    def inv(self, a: int) -> int:
        return self._top.inv(a)

    def div(self, a: int, b: int) -> int:
        return self._top.mul(a, self._top.inv(b))

    def pow(self, a: int, e: int) -> int:
        return self._top.pow(a, e)

    def sum(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self._top.add(acc, v)
        return acc

    def frob(self, a: int, j: int) -> int:
        """a ** (p ** (j mod rm))."""
        j %= self.degree
        if not j or not a:
            return a
        if self.has_tables:
            top = self._top
            return top.exp[top.log[a] * self._p_powers[j] % (self.order - 1)]
        return self._top.pow(a, self.p**j)

    def trace(self, a: int) -> int:
        """Relative trace GF(q^m) -> GF(q)."""
        acc = 0
        for i in range(self.m):
            acc = self.add(acc, self.frob(a, i * self.r))
        return acc

    def trace_abs(self, a: int) -> int:
        """Absolute trace GF(q^m) -> GF(p)."""
        acc = 0
        for i in range(self.degree):
            acc = self.add(acc, self.frob(a, i))
        return acc

    def log(self, a: int) -> int:
        if not a:
            raise FieldDivisionByZero("log of zero")
        if self.has_tables:
            return self._top.log[a]
        x, k = 1, 0
        while x != a:
            x = self._top.mul(x, self.primitive)
            k += 1
        return k

    def power_of_primitive(self, k: int) -> int:
        return self.pow(self.primitive, k)

    def multiplicative_order(self, a: int) -> int:
        if not a:
            raise FieldDivisionByZero("order of zero")
        n = self.order - 1
        for f in prime_factors(n):
            while n % f == 0 and self.pow(a, n // f) == 1:
                n //= f
        return n

    # -- structure --------------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def base_elements(self) -> range:
        return range(self.q)

    def in_base(self, a: int) -> bool:
        return 0 <= a < self.q

    def base_coords(self, a: int) -> list[int]:
        """Coordinates over GF(q) w.r.t. 1, y, ..., y^(m-1)."""
        return self._top.vec(a)

    def from_base_coords(self, v: Sequence[int]) -> int:
        return self._top.unvec(list(v) + [0] * (self.m - len(v)))

    def coords(self, a: int) -> list[list[int]]:
        """Nested GF(p) coordinates: m blocks of r digits."""
        return [self._inner.vec(c) for c in self._top.vec(a)]

    def from_coords(self, nested: Sequence[Sequence[int]]) -> int:
        return self.from_base_coords([self._inner.unvec(list(c) + [0] * (self.r - len(c))) for c in nested])

    def gfp_basis(self, over_base: bool = False) -> list[int]:
        """The monomial GF(p)-basis of GF(q^m) (or of GF(q))."""
        return [self.p**i for i in range(self.r if over_base else self.degree)]

    def random(self, rng: np.random.Generator, nonzero: bool = False) -> int:
        lo = 1 if nonzero else 0
        return int(rng.integers(lo, self.order))

    # -- vectorised arithmetic --------------------------------------------

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.has_tables:
            return self._exp_np[self._log_np[a] + self._log_np[b]]
        return np.vectorize(self.mul, otypes=[np.int64])(a, b)

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        d = self.digits_table()
        return ((d[a] + d[b]) % self.p) @ self._digit_weights()

    def vneg(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.asarray(a)
        d = self.digits_table()
        return ((-d[a]) % self.p) @ self._digit_weights()

    def vsum(self, a: np.ndarray, axis: int = -1) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        d = self.digits_table()[a]
        return (d.sum(axis=axis if axis >= 0 else axis - 1) % self.p) @ self._digit_weights()

    def vfrob(self, a: np.ndarray, j: int) -> np.ndarray:
        j %= self.degree
        if not j:
            return np.asarray(a)
        if j not in self._frob_np:
            if self.has_tables:
                idx = np.arange(self.order)
                self._frob_np[j] = self._exp_np[(self._log_np[idx] * self._p_powers[j]) % (self.order - 1)]
                self._frob_np[j][0] = 0
            else:
                self._frob_np[j] = np.array([self.frob(x, j) for x in range(self.order)])
        return self._frob_np[j][a]

    def vpow(self, a: np.ndarray, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if not self.has_tables:
            return np.vectorize(lambda x: self.pow(int(x), e), otypes=[np.int64])(a)
        M = self.order - 1
        out = self._exp_np[(self._log_np[a] * (e % M)) % M] if M else a.copy()
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def digits_table(self) -> np.ndarray:
        if self._digits_np is None:
            idx = np.arange(self.order, dtype=np.int64)
            w = self._digit_weights()
            self._digits_np = (idx[:, None] // w[None, :]) % self.p
        return self._digits_np

    def _digit_weights(self) -> np.ndarray:
        return self.p ** np.arange(self.degree, dtype=np.int64)

    def digits(self, a: np.ndarray, ndigits: int | None = None) -> np.ndarray:
        """Base-p digits of codes, shape a.shape + (ndigits,)."""
        ndigits = self.degree if ndigits is None else ndigits
        w = self.p ** np.arange(ndigits, dtype=np.int64)
        return (np.asarray(a, dtype=np.int64)[..., None] // w) % self.p

    # -- element I/O ------------------------------------------------------

    def _parse_without_tables(self, x: Any) -> int:
        if isinstance(x, FElem):
            if x.tower is not self:
                raise TowerMismatch("element belongs to a different tower")
            return x.value
        if isinstance(x, (list, tuple)):
            if x and all(isinstance(c, (list, tuple)) for c in x):
                return self.from_coords(x)
            if len(x) > self.m or any(not 0 <= int(c) < self.q for c in x):
                raise ParseError(f"bad coordinate vector {x!r}")
            return self.from_base_coords([int(c) for c in x])
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            x = int(x)
            if not 0 <= x < self.order:
                raise ParseError(f"element code {x} out of range for GF({self.order})")
            return x
        raise ParseError(f"cannot parse element {x!r}")

    _POWER = re.compile(r"^\s*a\s*(?:\^\s*(-?\d+))?\s*$")

    def parse(self, x: Any) -> int:
        """Element from an FElem, integer code, coordinate list or string.

        Strings are ``"0"``, ``"a^k"`` (power of the primitive element), a
        decimal integer code or a JSON coordinate list.
        """
        if isinstance(x, str):
            s = x.strip()
            m = self._POWER.match(s)
            if m:
                return self.power_of_primitive(int(m.group(1) or 1))
            if re.fullmatch(r"\d+", s):
                return self._parse_without_tables(int(s))
            if s.startswith("["):
                try:
                    return self._parse_without_tables(json.loads(s))
                except json.JSONDecodeError as exc:
                    raise ParseError(f"cannot parse element {x!r}") from exc
            raise ParseError(f"cannot parse element {x!r}")
        return self._parse_without_tables(x)

    def format(self, a: int) -> str:
        if not a:
            return "0"
        if self.has_tables:
            return f"a^{self._top.log[a]}"
        return json.dumps(self.base_coords(a))

    def elem(self, x: Any) -> FElem:
        return FElem(self, self.parse(x))

    @property
    def zero(self) -> FElem:
        return FElem(self, 0)

    @property
    def one(self) -> FElem:
        return FElem(self, 1)


def _search_primitive(F: _PolyField) -> int:
    if F.size == 2:
        return 1
    return next(g for g in range(2, F.size) if F.has_order(g, F.size - 1))


def find_primitive(t: FieldTower) -> FElem:
    """Smallest-code generator of GF(q^m)^*."""
    return FElem(t, _search_primitive(t._top))


class FElem:
    """A value-semantic element of a FieldTower's top field."""

    __slots__ = ("tower", "value")

    def __init__(self, tower: FieldTower, value: int):
        self.tower = tower
        self.value = int(value)

    def _other(self, b: Any) -> int:
        if isinstance(b, FElem):
            if b.tower is not self.tower:
                raise TowerMismatch("operands belong to different towers")
            return b.value
        if isinstance(b, int) and not isinstance(b, bool):
            # integers act through the prime subfield
            return b % self.tower.p
        return NotImplemented

    def _wrap(self, v: int) -> FElem:
        return FElem(self.tower, v)

    def __add__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else self._wrap(self.tower.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else self._wrap(self.tower.sub(self.value, v))

    def __rsub__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else self._wrap(self.tower.sub(v, self.value))

    def __mul__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else self._wrap(self.tower.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else self._wrap(self.tower.div(self.value, v))

    def __rtruediv__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else self._wrap(self.tower.div(v, self.value))

    def __neg__(self):
        return self._wrap(self.tower.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.tower.pow(self.value, e))

    def inv(self) -> FElem:
        return self._wrap(self.tower.inv(self.value))

    def frobenius(self, j: int) -> FElem:
        return self._wrap(self.tower.frob(self.value, j))

    def trace(self) -> FElem:
        return self._wrap(self.tower.trace(self.value))

    @property
    def coeffs(self) -> list[list[int]]:
        return self.tower.coords(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, FElem):
            return self.tower is other.tower and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.tower.p and self.value < self.tower.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.tower), self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return self.tower.format(self.value)


# ---------------------------------------------------------------------------
# construction helpers


def make_tower(p: int, inner_modulus: Sequence[int], outer_modulus: Sequence[Any], primitive: Any = None) -> FieldTower:
    return FieldTower(p, inner_modulus, outer_modulus, primitive)


def frobenius(a: FElem, j: int) -> FElem:
    return a.frobenius(j)


def trace_rel(a: FElem) -> FElem:
    return a.trace()


_ARITH = {
    "add": lambda t, a, b: t.add(a, b),
    "sub": lambda t, a, b: t.sub(a, b),
    "mul": lambda t, a, b: t.mul(a, b),
    "div": lambda t, a, b: t.div(a, b),
    "neg": lambda t, a, b: t.neg(a),
    "inv": lambda t, a, b: t.inv(a),
}


def arith(a: FElem, b: FElem | None, op: str) -> FElem:
    if b is not None and b.tower is not a.tower:
        raise TowerMismatch("operands belong to different towers")
    return FElem(a.tower, _ARITH[op](a.tower, a.value, 0 if b is None else b.value))


def smallest_primitive_poly(p: int, degree: int) -> list[int]:
    """Smallest-encoding monic primitive polynomial over GF(p)."""
    gfp = _PrimeField(p)
    for f in _monic_polys(gfp, degree):
        if degree == 1:
            root = gfp.neg(f[0])
            if root and _PolyField(gfp, [0, 1]).has_order(root, p - 1):
                return f
            continue
        if f[0] == 0 or not _is_irreducible(f, gfp):
            continue
        F = _PolyField(gfp, f)
        if F.has_order(p, p**degree - 1):  # code p is the class of x
            return f
    raise AssertionError("unreachable: primitive polynomials exist in every degree")


def smallest_irreducible_poly(F, degree: int) -> list[int]:
    for f in _monic_polys(F, degree):
        if _is_irreducible(f, F):
            return f
    raise AssertionError("unreachable")


def _smallest_root(top: _PolyField, poly_over_gfp: Sequence[int]) -> int:
    for x in range(top.size):
        acc = 0
        for c in reversed(poly_over_gfp):
            acc = top.add(top.mul_poly(acc, x) if acc else 0, c)
        if acc == 0:
            return x
    raise AssertionError("polynomial has no root in this field")


@functools.lru_cache(maxsize=None)
def default_tower(q: int, m: int) -> FieldTower:
    """The reproducible tower GF(q^m) over GF(q).

    The inner modulus is the smallest primitive polynomial of degree r over
    GF(p); the outer modulus is the smallest primitive polynomial of degree m
    over GF(p) when r = 1 and the smallest irreducible one over GF(q)
    otherwise.  The primitive element is the smallest root of the smallest
    primitive polynomial of degree rm over GF(p): X^6+X+1 for GF(64),
    X^2+X+2 for GF(9), X^2+X+1 for GF(4).
    """
    p, r = prime_power(q)
    gfp = _PrimeField(p)
    inner = [0, 1] if r == 1 else smallest_primitive_poly(p, r)
    if r == 1:
        outer = smallest_primitive_poly(p, m) if m > 1 else [0, 1]
    else:
        inner_field = _PolyField(gfp, inner)
        outer = smallest_irreducible_poly(inner_field, m)
    if m == 1 and r == 1:
        return FieldTower(p, inner, outer)
    if m == 1 or r == 1:
        # the adjoined generator (x or y) is already primitive; its code is p
        return FieldTower(p, inner, outer, primitive=p)
    probe = FieldTower(p, inner, outer, primitive=None)
    root = _smallest_root(probe._top, smallest_primitive_poly(p, r * m))
    return FieldTower(p, inner, outer, primitive=root)
