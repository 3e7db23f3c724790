"""Finite fields F_{p^n} as F_p[x]/(f) with a deterministic choice of f and generator.

The modulus is the lexicographically smallest monic irreducible of degree n,
comparing coefficient tuples constant term first; the generator is the first
element of order q - 1 in the same enumeration order.  Both choices make class
and character labels reproducible.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .arith import divisors, factorize, is_prime, mobius
from .limits import BoundExceeded, bounds

Poly = tuple  # coefficients over F_p, constant term first


# -- polynomials over F_p ---------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    df = len(f) - 1
    inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for j in range(df + 1):
            a[shift + j] = (a[shift + j] - c * f[j]) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _ppowmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    out = [1]
    a = _pmod(a, f, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, a, p), f, p)
        a = _pmod(_pmul(a, a, p), f, p)
        e >>= 1
    return out


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**n, f, p), x, p):
        return False
    for ell, _ in factorize(n):
        h = _psub(_ppowmod(x, p ** (n // ell), f, p), x, p)
        if len(_pgcd(list(f), h, p)) > 1:
            return False
    return True


def count_irreducible(d: int, q: int) -> int:
    """Number of monic irreducibles of degree d over F_q (Gauss/Moebius)."""
    return sum(mobius(e) * q ** (d // e) for e in divisors(d)) // d


# -- field context and elements ---------------------------------------------

class FqCtx:
    """The field F_q, q = p**n, with its modulus and primitive element."""

    def __init__(self, p: int, n: int, generator_rank: int = 0):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("degree must be positive")
        if p**n > bounds.max_field_order:
            raise BoundExceeded(f"F_{p}^{n} exceeds max_field_order={bounds.max_field_order}")
        self.p, self.n, self.q = p, n, p**n
        self.modulus: Poly = self._smallest_irreducible()
        self._log: dict[tuple[int, ...], int] | None = None
        self._exp: list[tuple[int, ...]] | None = None
        self.generator = self._find_generator(generator_rank)
        self.generator_rank = generator_rank
        if self.q <= bounds.max_log_table:
            self._build_tables()

    def __repr__(self):
        return f"FqCtx(p={self.p}, n={self.n}, modulus={self.modulus})"

    def _smallest_irreducible(self) -> Poly:
        p, n = self.p, self.n
        for low in itertools.product(range(p), repeat=n):
            f = tuple(low) + (1,)
            if is_irreducible(f, p):
                return f
        raise AssertionError("no irreducible polynomial found")

    def _find_generator(self, rank: int) -> "FqElem":
        seen = 0
        for a in self.elements():
            if a.is_zero():
                continue
            if a.order() == self.q - 1:
                if seen == rank:
                    return a
                seen += 1
        raise ValueError(f"F_{self.q} has fewer than {rank + 1} primitive elements")

    def _build_tables(self) -> None:
        exp, log = [], {}
        x = self.one
        for k in range(self.q - 1):
            exp.append(x.c)
            log[x.c] = k
            x = x * self.generator
        self._exp, self._log = exp, log

    # element constructors
    def __call__(self, coeffs) -> "FqElem":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = [x % self.p for x in coeffs] + [0] * (self.n - len(coeffs))
        if len(c) > self.n:
            c = _pmod(c, self.modulus, self.p)
            c = c + [0] * (self.n - len(c))
        return FqElem(self, tuple(c))

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, (0,) * self.n)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, (1,) + (0,) * (self.n - 1))

    def elements(self) -> Iterator["FqElem"]:
        """All elements in enumeration order (constant coefficient most significant)."""
        for c in itertools.product(range(self.p), repeat=self.n):
            yield FqElem(self, tuple(c))

    def exp(self, k: int) -> "FqElem":
        if self._exp is not None:
            return FqElem(self, self._exp[k % (self.q - 1)])
        return self.generator ** (k % (self.q - 1))

    def log(self, a: "FqElem") -> int:
        """Discrete log of a nonzero element relative to the generator."""
        if a.is_zero():
            raise ValueError("log of zero")
        if self._log is None:
            raise BoundExceeded(f"no discrete-log table for F_{self.q}")
        return self._log[a.c]

    def has_tables(self) -> bool:
        return self._log is not None


class FqElem:
    __slots__ = ("ctx", "c")

    def __init__(self, ctx: FqCtx, c: tuple[int, ...]):
        self.ctx = ctx
        self.c = c

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        return isinstance(other, FqElem) and other.ctx is self.ctx and other.c == self.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"FqElem({list(self.c)})"

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        p = self.ctx.p
        return FqElem(self.ctx, tuple((a + b) % p for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FqElem(self.ctx, tuple(-a % p for a in self.c))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        ctx = self.ctx
        if ctx._log is not None:
            if self.is_zero() or other.is_zero():
                return ctx.zero
            return FqElem(ctx, ctx._exp[(ctx._log[self.c] + ctx._log[other.c]) % (ctx.q - 1)])
        r = _pmod(_pmul(self.c, other.c, ctx.p), ctx.modulus, ctx.p)
        return FqElem(ctx, tuple(r) + (0,) * (ctx.n - len(r)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        ctx = self.ctx
        if self.is_zero():
            if e <= 0:
                raise ZeroDivisionError("0 has no inverse")
            return ctx.zero
        e %= ctx.q - 1
        if ctx._log is not None:
            return FqElem(ctx, ctx._exp[ctx._log[self.c] * e % (ctx.q - 1)])
        out, base = ctx.one, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "FqElem":
        return self ** -1

    def __truediv__(self, other):
        return self * other.inverse()

    def order(self) -> int:
        """Multiplicative order; divides q - 1."""
        if self.is_zero():
            raise ValueError("0 has no multiplicative order")
        k = self.ctx.q - 1
        one = self.ctx.one
        for ell, _ in factorize(k) if k > 1 else ():
            while k % ell == 0 and self ** (k // ell) == one:
                k //= ell
        return k

    def frobenius(self, times: int = 1) -> "FqElem":
        return self ** (self.ctx.p ** times)

    def in_subfield(self, m: int) -> bool:
        return self ** (self.ctx.p**m) == self

    def to_int(self) -> int:
        return sum(a * self.ctx.p**i for i, a in enumerate(self.c))


@lru_cache(maxsize=None)
def make_field(p: int, n: int, generator_rank: int = 0) -> FqCtx:
    return FqCtx(p, n, generator_rank)


def elem_order(a: FqElem) -> int:
    return a.order()


def trace(a: FqElem, m: int = 1) -> FqElem:
    """Trace from F_{p^n} down to F_{p^m} (m | n), as an element of a's field."""
    n = a.ctx.n
    if n % m:
        raise ValueError(f"{m} does not divide {n}")
    out = a.ctx.zero
    x = a
    for _ in range(n // m):
        out = out + x
        x = x.frobenius(m)
    return out


def norm(a: FqElem, m: int = 1) -> FqElem:
    """Norm from F_{p^n} down to F_{p^m} (m | n)."""
    n = a.ctx.n
    if n % m:
        raise ValueError(f"{m} does not divide {n}")
    out = a.ctx.one
    x = a
    for _ in range(n // m):
        out = out * x
        x = x.frobenius(m)
    return out


def quadratic_character(a: FqElem) -> int:
    ctx = a.ctx
    if ctx.p == 2:
        raise ValueError("quadratic character needs odd q")
    if a.is_zero():
        raise ValueError("quadratic character of 0")
    t = a ** ((ctx.q - 1) // 2)
    return 1 if t == ctx.one else -1


def to_prime_field(a: FqElem) -> int:
    """Integer value of an element lying in F_p."""
    if any(a.c[1:]):
        raise ValueError(f"{a} is not in the prime field")
    return a.c[0]


# -- extensions and irreducible polynomials -----------------------------------

@lru_cache(maxsize=None)
def embedding(small: FqCtx, big: FqCtx) -> dict[tuple[int, ...], tuple[int, ...]]:
    """A field embedding F_small -> F_big as a map on coefficient tuples.

    The image of x is the root of small.modulus that comes first among 0 and
    the powers of big.generator.
    """
    if small.p != big.p or big.n % small.n:
        raise ValueError("no embedding between these fields")
    step = (big.q - 1) // (small.q - 1)
    mod = small.modulus
    root = None
    candidates = itertools.chain([big.zero], (big.exp(k) for k in range(0, big.q - 1, step)))
    for b in candidates:
        acc = big.zero
        for c in reversed(mod):
            acc = acc * b + c
        if acc.is_zero():
            root = b
            break
    if root is None:
        raise AssertionError("modulus has no root in the extension")
    powers = [big.one]
    for _ in range(small.n - 1):
        powers.append(powers[-1] * root)
    out = {}
    for a in small.elements():
        img = big.zero
        for c, pw in zip(a.c, powers):
            if c:
                img = img + pw * c
        out[a.c] = img.c
    return out


def frobenius_orbits(d: int, q: int) -> list[tuple[int, ...]]:
    """Orbits of e -> q*e on Z_{q^d - 1} of size exactly d, each sorted, sorted by min.

    Exponent orbits correspond to monic irreducibles of degree d over F_q other
    than t: the roots are g**e for e in the orbit, g a generator of F_{q^d}^x.
    """
    N = q**d - 1
    seen = set()
    out = []
    for e in range(N):
        if e in seen:
            continue
        orb = []
        x = e
        while x not in orb:
            orb.append(x)
            x = x * q % N
        seen.update(orb)
        if len(orb) == d:
            out.append(tuple(sorted(orb)))
    return out


def min_poly(orbit: Sequence[int], ctx: FqCtx, big: FqCtx) -> tuple[FqElem, ...]:
    """Minimal polynomial over ctx of big.generator**orbit[0], constant-first."""
    emb = embedding(ctx, big)
    back = {v: k for k, v in emb.items()}
    coeffs = [big.one]
    for e in orbit:
        root = big.exp(e)
        # multiply by (t - root)
        nxt = [big.zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * root
        coeffs = nxt
    return tuple(FqElem(ctx, back[c.c]) for c in coeffs)


def irreducibles(d: int, ctx: FqCtx, exclude_t: bool = False) -> list[tuple[FqElem, ...]]:
    """All monic irreducible polynomials of degree d over ctx, constant-first."""
    if ctx.q**d > bounds.max_field_order:
        raise BoundExceeded(f"F_{ctx.q}^{d} exceeds max_field_order={bounds.max_field_order}")
    big = make_field(ctx.p, ctx.n * d)
    polys = [min_poly(orb, ctx, big) for orb in frobenius_orbits(d, ctx.q)]
    if d == 1 and not exclude_t:
        polys.append((ctx.zero, ctx.one))
    polys.sort(key=lambda f: [a.c for a in f])
    return polys


def poly_mul(f: Sequence[FqElem], g: Sequence[FqElem]) -> list[FqElem]:
    ctx = f[0].ctx
    out = [ctx.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out
