"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored at a *level* n as its coordinate vector on the power
basis ``1, z, ..., z**(phi(n)-1)`` of Q(zeta_n), i.e. reduced modulo the n-th
cyclotomic polynomial.  Coefficients are ``int`` or ``fractions.Fraction``.

Binary operations unify the operands at the lcm of their levels.  Results are
never lowered automatically; use :meth:`Cyclotomic.change_level` or
:meth:`Cyclotomic.lowered` for that.
"""

from __future__ import annotations

import cmath
import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Union

from .arith import divisors, lcm, totient
from .limits import check_level

Number = Union[int, Fraction]

# Above this level the full table of reduced powers is not kept; reduction
# falls back to polynomial long division.
_TABLE_LIMIT = 20000


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact quotient of integer polynomials (constant-first), den monic."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("polynomial division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as integer coefficients, constant term first.

    Computed as (x**n - 1) divided by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


class _Level:
    """Per-level reduction data: Phi_n and the reduced powers of zeta_n."""

    def __init__(self, n: int):
        self.n = n
        self.phi = totient(n)
        self.poly = cyclotomic_polynomial(n)
        self.rows: list[tuple[tuple[int, int], ...]] | None = None
        self._lock = threading.Lock()

    def table(self) -> list[tuple[tuple[int, int], ...]]:
        if self.rows is None:
            with self._lock:
                if self.rows is None:
                    self.rows = self._build()
        return self.rows

    def _build(self):
        phi, poly = self.phi, self.poly
        rows = []
        cur = [0] * phi
        if phi:
            cur[0] = 1
        for e in range(self.n):
            rows.append(tuple((i, c) for i, c in enumerate(cur) if c))
            # multiply by z: shift, then replace z**phi by -sum(poly[i] z**i)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(phi):
                    cur[i] -= top * poly[i]
        return rows

    def reduce(self, terms: Mapping[int, Number]) -> tuple[Number, ...]:
        n, phi = self.n, self.phi
        out: list[Number] = [0] * phi
        if n <= _TABLE_LIMIT:
            rows = self.table()
            for e, c in terms.items():
                if c:
                    for i, r in rows[e % n]:
                        out[i] += c * r
        else:
            dense: list[Number] = [0] * n
            for e, c in terms.items():
                dense[e % n] += c
            poly = self.poly
            for k in range(n - 1, phi - 1, -1):
                c = dense[k]
                if c:
                    for j in range(phi):
                        dense[k - phi + j] -= c * poly[j]
            out = dense[:phi]
        return tuple(_norm(c) for c in out)


@lru_cache(maxsize=None)
def _cached_level(n: int) -> _Level:
    return _Level(n)


def _level(n: int) -> _Level:
    check_level(n)
    return _cached_level(n)


class Cyclotomic:
    """An element of Q(zeta_level) in canonical power-basis form."""

    __slots__ = ("level", "coeffs", "_hash")

    def __init__(self, level: int, coeffs: Iterable[Number]):
        coeffs = tuple(_norm(Fraction(c) if not isinstance(c, int) else c) for c in coeffs)
        if len(coeffs) != totient(level):
            raise ValueError(f"level {level} needs {totient(level)} coefficients, got {len(coeffs)}")
        self.level = level
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, level: int, coeffs: tuple[Number, ...]) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.level = level
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def from_exponents(cls, n: int, terms: Mapping[int, Number] | Iterable[tuple[int, Number]]) -> "Cyclotomic":
        """Build ``sum c * zeta_n**e`` from exponent/coefficient pairs."""
        if not isinstance(terms, Mapping):
            acc: dict[int, Number] = {}
            for e, c in terms:
                acc[e % n] = acc.get(e % n, 0) + c
            terms = acc
        return cls._raw(n, _level(n).reduce(terms))

    @classmethod
    def rational(cls, x: Number) -> "Cyclotomic":
        return cls._raw(1, (_norm(Fraction(x)),))

    # -- inspection ---------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Number:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def terms(self) -> dict[int, Number]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def to_complex(self) -> complex:
        n = self.level
        return sum(complex(c) * cmath.exp(2j * cmath.pi * i / n) for i, c in self.terms().items())

    # -- level handling -----------------------------------------------------

    def raise_to(self, m: int) -> "Cyclotomic":
        if m % self.level:
            raise ValueError(f"level {self.level} does not divide {m}")
        if m == self.level:
            return self
        f = m // self.level
        return Cyclotomic.from_exponents(m, {i * f: c for i, c in self.terms().items()})

    def change_level(self, m: int) -> "Cyclotomic":
        """The same number written at level m; fails if it is not in Q(zeta_m)."""
        if m < 1:
            raise ValueError("level must be positive")
        if m % self.level == 0:
            return self.raise_to(m)
        n = lcm(self.level, m)
        return _lower(self.raise_to(n), m)

    def lies_in(self, m: int) -> bool:
        """True if this element belongs to Q(zeta_m)."""
        n = lcm(self.level, m)
        x = self.raise_to(n)
        for s in range(1, n, m):
            if gcd(s, n) == 1 and x.galois(s) != x:
                return False
        return True

    def lowered(self) -> "Cyclotomic":
        """Representation at the smallest level containing this element."""
        for m in divisors(self.level):
            if m % 4 == 2:
                continue
            if m == self.level:
                return self
            if self.lies_in(m):
                return _lower(self, m)
        return self

    # -- Galois action ------------------------------------------------------

    def galois(self, s: int) -> "Cyclotomic":
        """Image under zeta_n -> zeta_n**s."""
        n = self.level
        if gcd(s, n) != 1:
            raise ValueError(f"{s} is not a unit modulo {n}")
        s %= n
        if s == 1 or n <= 2:
            return self
        return Cyclotomic.from_exponents(n, {(i * s) % n: c for i, c in self.terms().items()})

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, Rational):
            return Cyclotomic.rational(x)
        return NotImplemented

    def _unify(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self.level == other.level:
            return self, other
        n = lcm(self.level, other.level)
        return self.raise_to(n), other.raise_to(n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._unify(other)
        return Cyclotomic._raw(a.level, tuple(_norm(x + y) for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            r = _norm(Fraction(other))
            return Cyclotomic._raw(self.level, tuple(_norm(c * r) for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._unify(other)
        if a.level == 1:
            return Cyclotomic._raw(1, (_norm(a.coeffs[0] * b.coeffs[0]),))
        n = a.level
        acc: dict[int, Number] = {}
        bt = b.terms()
        for i, x in a.terms().items():
            for j, y in bt.items():
                k = (i + j) % n
                acc[k] = acc.get(k, 0) + x * y
        return Cyclotomic.from_exponents(n, acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.level == other.level:
            return self.coeffs == other.coeffs
        a, b = self._unify(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                low = self.lowered()
                self._hash = hash((low.level, low.coeffs))
        return self._hash

    # -- display ------------------------------------------------------------

    def __repr__(self):
        return f"Cyclotomic({self.level}, {list(map(str, self.coeffs))})"

    def __str__(self):
        return render(self)


def render(a: Cyclotomic) -> str:
    """Human readable ``a + b*zeta_n + c*zeta_n^2 ...`` form."""
    terms = a.terms()
    if not terms:
        return "0"
    parts = []
    for i, c in sorted(terms.items()):
        if i == 0:
            mono = None
        elif i == 1:
            mono = f"zeta_{a.level}"
        else:
            mono = f"zeta_{a.level}^{i}"
        if mono is None:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@lru_cache(maxsize=None)
def _lowering_system(m: int, n: int):
    """Pivot rows and inverse of the square block of the level-raising map."""
    pm, pn = totient(m), totient(n)
    f = n // m
    lvl = _level(n)
    cols = [lvl.reduce({j * f: 1}) for j in range(pm)]
    rows = [[Fraction(cols[j][i]) for j in range(pm)] for i in range(pn)]
    # greedy choice of independent rows
    basis: list[tuple[int, list[Fraction]]] = []
    chosen: list[int] = []
    for i, row in enumerate(rows):
        v = list(row)
        for piv, b in basis:
            if v[piv]:
                c = v[piv]
                v = [x - c * y for x, y in zip(v, b)]
        nz = next((k for k, x in enumerate(v) if x), None)
        if nz is None:
            continue
        c = v[nz]
        v = [x / c for x in v]
        # keep the basis fully reduced
        basis = [(p, [x - b[nz] * y for x, y in zip(b, v)]) for p, b in basis]
        basis.append((nz, v))
        chosen.append(i)
        if len(chosen) == pm:
            break
    a = [rows[i] for i in chosen]
    return tuple(chosen), _invert(a)


def _invert(a: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(a)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        c = aug[col][col]
        aug[col] = [x / c for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def _lower(a: Cyclotomic, m: int) -> Cyclotomic:
    n = a.level
    if n % m:
        raise ValueError(f"cannot lower from level {n} to non-divisor {m}")
    if n == m:
        return a
    chosen, inv = _lowering_system(m, n)
    rhs = [a.coeffs[i] for i in chosen]
    c = [_norm(sum(x * y for x, y in zip(row, rhs))) for row in inv]
    out = Cyclotomic._raw(m, tuple(c))
    if out.raise_to(n).coeffs != a.coeffs:
        raise ValueError(f"{a} does not lie in Q(zeta_{m})")
    return out


# -- functional interface ---------------------------------------------------

def cyclo_root(n: int, e: int = 1) -> Cyclotomic:
    """zeta_n**e in canonical form."""
    if n < 1:
        raise ValueError("n must be positive")
    return Cyclotomic.from_exponents(n, {e % n: 1})


def root_sum(n: int, exponents: Iterable[int], coeff: Number = 1) -> Cyclotomic:
    """coeff * sum of zeta_n**e over the given exponents (with multiplicity)."""
    acc: dict[int, Number] = {}
    for e in exponents:
        acc[e % n] = acc.get(e % n, 0) + coeff
    return Cyclotomic.from_exponents(n, acc)


def add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def sub(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a - b


def mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def neg(a: Cyclotomic) -> Cyclotomic:
    return -a


def galois_apply(s: int, a: Cyclotomic) -> Cyclotomic:
    return a.galois(s)


def change_level(a: Cyclotomic, m: int) -> Cyclotomic:
    return a.change_level(m)
