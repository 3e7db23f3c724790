"""GL_m(F_q) for general m: class types, element orders and character fields.

A conjugacy class is a finite set of primary parts (f, lambda): f a monic
irreducible over F_q other than t, lambda a partition, with
sum deg(f) * |lambda| = m.  Roots of f are g^e for e in a Frobenius orbit of
Z_{q^d - 1}, g the chosen generator of F_{q^d}^x, so classes are enumerated
from exponent orbits and the polynomial is attached afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, prod
from typing import Iterator

from .arith import lcm, mult_order, prime_power, totient, units
from .cyclotomic import Cyclotomic, cyclotomic_polynomial, root_sum
from .finite_field import frobenius_orbits, make_field, min_poly
from .galois import FieldDescriptor, field_of, fixed_field, rational_field, unique_subfield
from .limits import BoundExceeded, IndeterminateField, NoElementOfOrder, bounds

Partition = tuple[int, ...]


def partitions(k: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of k as weakly decreasing tuples, in reverse lex order."""
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def conjugate_partition(lam: Partition) -> Partition:
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0])) if lam else ()


def _unipotent_exponent_order(largest_part: int, p: int) -> int:
    """Order of a unipotent Jordan block of the given size: least p^s >= size."""
    e = 1
    while e < largest_part:
        e *= p
    return e


def centralizer_order(lam: Partition, Q: int) -> int:
    """|C(U_lambda(f))| for deg f = d, with Q = q^d."""
    mult: dict[int, int] = {}
    for x in lam:
        mult[x] = mult.get(x, 0) + 1
    val = Fraction(Q) ** sum(c * c for c in conjugate_partition(lam))
    for m_i in mult.values():
        for s in range(1, m_i + 1):
            val *= 1 - Fraction(1, Q**s)
    assert val.denominator == 1
    return val.numerator


@dataclass(frozen=True)
class Primary:
    degree: int
    orbit: tuple[int, ...]
    partition: Partition
    poly: tuple[int, ...]  # constant-first, coefficients as integers of F_q

    @property
    def multiplicity(self) -> int:
        return sum(self.partition)


@dataclass(frozen=True)
class ClassType:
    """One conjugacy class of GL_m(F_q) in Jordan normal form data."""

    q: int
    parts: tuple[Primary, ...]

    @property
    def m(self) -> int:
        return sum(pr.degree * pr.multiplicity for pr in self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def type_key(self) -> tuple:
        """The class type: the polynomials forgotten, multiset of (d, lambda)."""
        return tuple(sorted((pr.degree, pr.partition) for pr in self.parts))

    @property
    def semisimple_order(self) -> int:
        return lcm(*(_root_order(pr.orbit[0], self.q ** pr.degree - 1) for pr in self.parts))

    @property
    def element_order(self) -> int:
        p = prime_power(self.q)[0]
        top = max(pr.partition[0] for pr in self.parts)
        return self.semisimple_order * _unipotent_exponent_order(top, p)

    @property
    def centralizer(self) -> int:
        return prod(centralizer_order(pr.partition, self.q ** pr.degree) for pr in self.parts)

    @property
    def size(self) -> int:
        return glm_order(self.m, self.q) // self.centralizer


def _root_order(e: int, N: int) -> int:
    return N // gcd(e, N)


def roots_order_lcm(q: int, parts: list[tuple[int, int]]) -> int:
    """lcm of the orders of roots g_d^e, for (d, e) pairs."""
    return lcm(*(_root_order(e, q**d - 1) for d, e in parts))


def glm_order(m: int, q: int) -> int:
    out = 1
    for k in range(m):
        out *= q**m - q**k
    return out


def glm_order_factored(m: int, q: int) -> int:
    """q^{m(m-1)/2} prod_{k <= m} Phi_k(q)^floor(m/k)."""
    out = q ** (m * (m - 1) // 2)
    for k in range(1, m + 1):
        phi = cyclotomic_polynomial(k)
        out *= sum(c * q**i for i, c in enumerate(phi)) ** (m // k)
    return out


def _check_enum_bounds(m: int, q: int) -> None:
    if m > bounds.max_m:
        raise BoundExceeded(f"m={m} exceeds max_m={bounds.max_m}")
    if m >= 3 and q > bounds.max_q:
        raise BoundExceeded(f"q={q} exceeds max_q={bounds.max_q} for m >= 3")
    if q**m > bounds.max_field_order:
        raise BoundExceeded(f"q^m={q**m} exceeds max_field_order={bounds.max_field_order}")


@lru_cache(maxsize=None)
def _primary_pool(m: int, q: int) -> tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]:
    """(degree, orbit, polynomial) for every monic irreducible != t of degree <= m."""
    p, n = prime_power(q)
    F = make_field(p, n)
    pool = []
    for d in range(1, m + 1):
        big = make_field(p, n * d)
        for orb in frobenius_orbits(d, q):
            poly = tuple(c.to_int() for c in min_poly(orb, F, big))
            pool.append((d, orb, poly))
    return tuple(pool)


@lru_cache(maxsize=None)
def class_types(m: int, q: int) -> tuple[ClassType, ...]:
    """Every conjugacy class of GL_m(F_q)."""
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    _check_enum_bounds(m, q)
    pool = _primary_pool(m, q)
    out: list[ClassType] = []

    def rec(start: int, budget: int, acc: list[Primary]) -> None:
        if budget == 0:
            out.append(ClassType(q, tuple(acc)))
            return
        for i in range(start, len(pool)):
            d, orb, poly = pool[i]
            if d > budget:
                continue
            for k in range(1, budget // d + 1):
                for lam in partitions(k):
                    acc.append(Primary(d, orb, lam, poly))
                    rec(i + 1, budget - d * k, acc)
                    acc.pop()

    rec(0, m, [])
    return tuple(out)


def class_count(m: int, q: int) -> int:
    """Number of classes from prod_k (1 - x^k) / (1 - q x^k)."""
    series = [1] + [0] * m
    for k in range(1, m + 1):
        # multiply by (1 - x^k) * sum_j q^j x^{jk}
        geo = [0] * (m + 1)
        for j in range(0, m // k + 1):
            geo[j * k] = q**j
        nxt = [0] * (m + 1)
        for i, a in enumerate(series):
            if a:
                for j, b in enumerate(geo):
                    if b and i + j <= m:
                        nxt[i + j] += a * b
        series = [nxt[i] - (nxt[i - k] if i >= k else 0) for i in range(m + 1)]
    return series[m]


# -- fields ---------------------------------------------------------------------

def omega(d: int, r: int, q: int) -> Cyclotomic:
    """sum_{k < d} zeta_{q^d - 1}^{r q^k}."""
    N = q**d - 1
    return root_sum(N, [r * q**k for k in range(d)])


def k_glm(m: int, q: int) -> FieldDescriptor:
    """K(GL_m(F_q)) from the omega_d(r), d <= m, r a unit mod q^d - 1."""
    if m < 1:
        raise ValueError("m must be positive")
    gens = [omega(d, r, q) for d in range(1, m + 1) for r in units(q**d - 1)]
    return field_of(gens)


def exists_order(m: int, q: int, ell: int, r: int) -> bool:
    p = prime_power(q)[0]
    if ell == p:
        return p ** (r - 1) < m
    return mult_order(q, ell**r) <= m


def _level_sets(ks: list[int], r: int, m: int) -> list[tuple[int, ...]]:
    """Multisets of levels a (1 <= a <= r) containing r with sum k_a <= m."""
    out = []

    def rec(a: int, budget: int, acc: list[int]) -> None:
        if a == 0:
            out.append(tuple(sorted(acc)))
            return
        k = ks[a - 1]
        for c in range(0, budget // k + 1):
            if a == r and c == 0:
                continue
            rec(a - 1, budget - c * k, acc + [a] * c)

    rec(r, m, [])
    return sorted(set(out))


def _period(ell: int, a: int, i: int, k: int, q: int) -> Cyclotomic:
    n = ell**a
    return root_sum(n, [i * pow(q, t, n) for t in range(k)])


def lemma_product(q: int, ell: int, r: int, i: tuple[int, ...]) -> Cyclotomic:
    """prod_{a=1}^r sum_{t < k_a} zeta_{ell^a}^{i_a q^t}, with k_a = ord_{ell^a}(q)."""
    if len(i) != r:
        raise ValueError("need one index per level")
    out = Cyclotomic.rational(1)
    for a in range(1, r + 1):
        out = out * _period(ell, a, i[a - 1], mult_order(q, ell**a), q)
    return out


def order_ellr_value_generators(m: int, q: int, ell: int, r: int,
                                unit_top: bool = True) -> list[Cyclotomic]:
    """Distinct nonzero period products attached to classes of order ell^r.

    A class of order ell^r has eigenvalue orbits at levels a <= r, the top level
    occurring; the degree budget sum k_a must fit inside m.  A character value
    there is an integer multiple of a product of periods, one per orbit.  With
    ``unit_top`` the top-level index ranges over units only; otherwise over all
    residues, since a character of F_{q^k}^x may send a root of order ell^r to
    a root of unity of smaller order.
    """
    p = prime_power(q)[0]
    if ell == p:
        raise ValueError("ell must differ from the characteristic")
    if not exists_order(m, q, ell, r):
        raise NoElementOfOrder(f"GL_{m}(F_{q}) has no element of order {ell}^{r}")
    ks = [mult_order(q, ell**a) for a in range(1, r + 1)]
    seen: set[Cyclotomic] = set()
    out: list[Cyclotomic] = []
    for levels in _level_sets(ks, r, m):
        ranges = []
        for a in levels:
            n = ell**a
            ranges.append(units(n) if (a == r and unit_top) else range(n))
        cache = {}
        for idx in product(*ranges):
            val = Cyclotomic.rational(1)
            for a, i in zip(levels, idx):
                key = (a, i)
                if key not in cache:
                    cache[key] = _period(ell, a, i, ks[a - 1], q)
                val = val * cache[key]
            if not val.is_zero() and val not in seen:
                seen.add(val)
                out.append(val)
    return out


def tau_fixed_field(q: int, ell: int, r: int) -> FieldDescriptor:
    """Q(zeta_{ell^r})^<tau_q>."""
    return fixed_field(ell**r, [q % ell**r])


def k_ellr_glm(m: int, q: int, ell: int, r: int, check: bool = False) -> FieldDescriptor:
    """K_{ell^r}(GL_m(F_q)).

    For odd ell != p the field is generated by the period products.  With
    ``check`` the result is compared against the fixed field of tau_q and the
    subfield of the predicted degree, and a mismatch raises ArithmeticError.
    """
    p = prime_power(q)[0]
    if not exists_order(m, q, ell, r):
        raise NoElementOfOrder(f"GL_{m}(F_{q}) has no element of order {ell}^{r}")
    if ell == p:
        return rational_field()
    if ell == 2 and r > 2:
        if m == 2:
            from .tables import gl2_table

            return gl2_table(q).field_generated(2**r)
        raise IndeterminateField(f"K_{2**r}(GL_{m}(F_{q})) is not determined for 2-powers beyond 4")
    fd = field_of(order_ellr_value_generators(m, q, ell, r, unit_top=False))
    if check:
        n = ell**r
        a = tau_fixed_field(q, ell, r)
        b = unique_subfield(ell, r, totient(n) // mult_order(q, n))
        if not (fd == a == b):
            raise ArithmeticError(f"K_{n}(GL_{m}(F_{q})): generators {fd}, tau-fixed {a}, by degree {b}")
    return fd


@dataclass(frozen=True)
class LemmaCheck:
    q: int
    ell: int
    r: int
    i: tuple[int, ...]
    value: Cyclotomic
    field: FieldDescriptor
    expected: FieldDescriptor
    conjugates: int
    expected_conjugates: int

    @property
    def ok(self) -> bool:
        return self.field == self.expected and self.conjugates == self.expected_conjugates


def lemma31_details(q: int, ell: int, r: int, i: tuple[int, ...]) -> LemmaCheck:
    n = ell**r
    if gcd(q, ell) != 1:
        raise ValueError("q must be prime to ell")
    if gcd(i[-1], ell) != 1:
        raise ValueError("the top index must be a unit")
    val = lemma_product(q, ell, r, tuple(i))
    conj = {val.galois(s) for s in units(n)}
    return LemmaCheck(q, ell, r, tuple(i), val, field_of([val]), tau_fixed_field(q, ell, r),
                      len(conj), totient(n) // mult_order(q, n))


def lemma31_check(q: int, ell: int, r: int, i: tuple[int, ...]) -> bool:
    """Does the single product generate Q(zeta_{ell^r})^<tau_q> with the right conjugate count?"""
    return lemma31_details(q, ell, r, i).ok


def lemma31_tuples(ell: int, r: int) -> Iterator[tuple[int, ...]]:
    ranges = [range(ell**a) for a in range(1, r)] + [units(ell**r)]
    return product(*ranges)
