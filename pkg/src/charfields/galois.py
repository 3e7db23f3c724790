"""Subfields of cyclotomic fields through the Galois correspondence.

A subfield K of Q(zeta_N) is the fixed field of a subgroup H of
Gal(Q(zeta_N)/Q) = Z_N^x.  Descriptors are always reduced to the conductor,
so two fields are equal exactly when their descriptors are.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

from .arith import (
    divisors, factorize, is_prime, is_squarefree, lcm, legendre, mult_order,
    star, totient, units,
)
from .cyclotomic import Cyclotomic, cyclo_root, root_sum

# Set by the test suite: re-check that every stabilizer is a subgroup.
CHECK_INVARIANTS = bool(os.environ.get("CHARFIELDS_CHECK_INVARIANTS"))


@dataclass(frozen=True)
class ResidueGroup:
    """A subgroup of Z_n^x, elements sorted ascending (``(0,)`` when n == 1)."""

    modulus: int
    elements: tuple[int, ...]

    @classmethod
    def full(cls, n: int) -> "ResidueGroup":
        return cls(n, tuple(units(n)))

    @classmethod
    def generated_by(cls, n: int, gens: Iterable[int]) -> "ResidueGroup":
        elems = {1 % n}
        frontier = [1 % n]
        gens = [g % n for g in gens]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = x * g % n
                if y not in elems:
                    elems.add(y)
                    frontier.append(y)
        return cls(n, tuple(sorted(elems)))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, s: int) -> bool:
        return s % self.modulus in self._set

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def is_subgroup(self) -> bool:
        n, s = self.modulus, set(self.elements)
        if 1 % n not in s or any(gcd(x, n) != 1 for x in s if n > 1):
            return False
        return all(a * b % n in s for a in s for b in s)

    def image(self, m: int) -> "ResidueGroup":
        """Image under the reduction Z_n^x -> Z_m^x (m | n)."""
        return ResidueGroup(m, tuple(sorted({x % m for x in self.elements})))

    def preimage(self, n: int) -> "ResidueGroup":
        """Preimage in Z_n^x (modulus | n)."""
        return ResidueGroup(n, tuple(s for s in units(n) if s % self.modulus in self._set))


@dataclass(frozen=True)
class FieldDescriptor:
    """Abelian number field Q(zeta_f)^H in conductor-minimal form."""

    conductor: int
    fixing_subgroup: ResidueGroup
    degree: int = field(compare=False)

    @property
    def fixing_residues(self) -> tuple[int, ...]:
        return self.fixing_subgroup.elements

    def __str__(self) -> str:
        return self.names()[0]

    def lifted(self, n: int) -> ResidueGroup:
        return self.fixing_subgroup.preimage(n)

    def __le__(self, other: "FieldDescriptor") -> bool:
        """Field containment: self is a subfield of other."""
        n = lcm(self.conductor, other.conductor)
        return set(other.lifted(n).elements) <= set(self.lifted(n).elements)

    def is_rational(self) -> bool:
        return self.degree == 1

    def names(self) -> list[str]:
        f, H = self.conductor, self.fixing_subgroup
        if self.degree == 1:
            return ["Q"]
        out = []
        if len(H) == 1:
            out.append("Q(i)" if f == 4 else f"Q(zeta_{f})")
        if len(H) == 2 and f - 1 in H:
            out.append(f"Q(zeta_{f} + zeta_{f}^-1)")
        if self.degree == 2:
            out.append(f"Q(sqrt({quadratic_radicand(self)}))")
        if not out:
            out.append(f"Q(zeta_{f})^<{','.join(map(str, H.elements))}>")
        return out

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "fixing_residues": list(self.fixing_residues),
            "degree": self.degree,
            "names": self.names(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FieldDescriptor":
        return field_reduce(d["conductor"], d["fixing_residues"])


def quadratic_radicand(fd: FieldDescriptor) -> int:
    """Squarefree m with fd = Q(sqrt(m)); fd must be quadratic."""
    if fd.degree != 2:
        raise ValueError(f"{fd.conductor}-conductor field of degree {fd.degree} is not quadratic")
    f = fd.conductor
    disc = f if (f - 1) in fd.fixing_subgroup else -f
    return disc if disc % 4 == 1 else disc // 4


# -- stabilizers and reduction ----------------------------------------------

def _stab_same_level(gens: Sequence[Cyclotomic], n: int) -> list[int]:
    H = units(n)
    seen = set()
    for g in gens:
        if g.is_rational() or g.coeffs in seen:
            continue
        seen.add(g.coeffs)
        H = [s for s in H if g.galois(s) == g]
        if len(H) == 1:
            break
    return H


def stabilizer(gens: Iterable[Cyclotomic], N: int) -> ResidueGroup:
    """Subgroup of Z_N^x fixing every generator.

    Each generator is handled at its own level and the results are pulled
    back to Z_N^x, which keeps the work proportional to the small levels.
    """
    by_level: dict[int, list[Cyclotomic]] = {}
    for g in gens:
        if N % g.level:
            g = g.change_level(N)
        by_level.setdefault(g.level, []).append(g)
    local = {n: set(_stab_same_level(gs, n)) for n, gs in by_level.items()}
    elems = tuple(s for s in units(N) if all(s % n in H for n, H in local.items()))
    out = ResidueGroup(N, elems)
    if CHECK_INVARIANTS:
        assert out.is_subgroup(), f"stabilizer at level {N} is not a subgroup"
    return out


def field_reduce(N: int | FieldDescriptor, H: Iterable[int] | ResidueGroup | None = None) -> FieldDescriptor:
    """Conductor-minimal descriptor of Q(zeta_N)^H.

    The conductor is the least divisor n of N with ker(Z_N^x -> Z_n^x) inside
    H; H is replaced by its image in Z_n^x.
    """
    if isinstance(N, FieldDescriptor):
        N, H = N.conductor, N.fixing_subgroup
    if isinstance(H, ResidueGroup):
        H = H.elements
    Hset = {h % N for h in H}
    U = units(N)
    for n in divisors(N):
        if all(s in Hset for s in U if s % n == 1 % n):
            img = ResidueGroup(n, tuple(sorted({h % n for h in Hset})))
            return FieldDescriptor(n, img, totient(n) // len(img))
    raise AssertionError("unreachable: n = N always qualifies")


def field_of(gens: Iterable[Cyclotomic]) -> FieldDescriptor:
    """The field generated over Q by the given cyclotomic numbers."""
    gens = list(gens)
    N = lcm(*(g.level for g in gens)) if gens else 1
    return field_reduce(N, stabilizer(gens, N))


def fixed_field(n: int, gens: Iterable[int]) -> FieldDescriptor:
    """Fixed field in Q(zeta_n) of the subgroup generated by the given residues."""
    return field_reduce(n, ResidueGroup.generated_by(n, gens))


def compositum(*fields: FieldDescriptor) -> FieldDescriptor:
    if not fields:
        return rational_field()
    n = lcm(*(f.conductor for f in fields))
    H = set(units(n))
    for f in fields:
        H &= set(f.lifted(n).elements)
    return field_reduce(n, sorted(H))


@lru_cache(maxsize=None)
def primitive_root(n: int) -> int:
    """Least generator of the cyclic group Z_n^x."""
    phi = totient(n)
    for g in units(n):
        if mult_order(g, n) == phi:
            return g
    raise ValueError(f"Z_{n}^x is not cyclic")


def unique_subfield(ell: int, r: int, d: int) -> FieldDescriptor:
    """The subfield of Q(zeta_{ell^r}) of degree d, ell an odd prime."""
    if ell % 2 == 0 or not is_prime(ell):
        raise ValueError("ell must be an odd prime")
    n = ell**r
    phi = totient(n)
    if phi % d:
        raise ValueError(f"{d} does not divide phi({n}) = {phi}")
    g = primitive_root(n)
    return fixed_field(n, [pow(g, d, n)])


# -- explicit generators ----------------------------------------------------

def gauss_sum(p: int) -> Cyclotomic:
    """sum_t legendre(t, p) zeta_p^t; its square is p*."""
    acc = {t: legendre(t, p) for t in range(1, p)}
    return Cyclotomic.from_exponents(p, acc)


def sqrt_qstar_element(p: int, n: int = 1) -> Cyclotomic:
    """Quadratic Gauss sum over F_q, q = p**n: sum eta(u) zeta_p^Tr(u).

    The result squares to q* exactly (checked before returning).
    """
    from .finite_field import make_field, quadratic_character, to_prime_field, trace

    if p % 2 == 0:
        raise ValueError("sqrt(q*) needs odd p")
    F = make_field(p, n)
    acc: dict[int, int] = {}
    for u in F.elements():
        if u.is_zero():
            continue
        t = to_prime_field(trace(u, 1))
        acc[t] = acc.get(t, 0) + quadratic_character(u)
    G = Cyclotomic.from_exponents(p, acc)
    qstar = star(p**n)
    if G * G != qstar:
        raise ArithmeticError(f"Gauss sum over F_{p}^{n} does not square to {qstar}")
    return G


def sqrt_element(m: int) -> Cyclotomic:
    """A cyclotomic number whose square is the integer m (m squarefree)."""
    if not is_squarefree(m):
        raise ValueError(f"{m} is not squarefree")
    out = Cyclotomic.rational(1)
    if m < 0:
        out = out * cyclo_root(4)
    for p, _ in factorize(abs(m)) if abs(m) > 1 else ():
        if p == 2:
            out = out * (cyclo_root(8, 1) + cyclo_root(8, -1))
        else:
            g = gauss_sum(p)
            if p % 4 == 3:
                g = g * cyclo_root(4, -1)
            out = out * g
    return out


def rational_field() -> FieldDescriptor:
    return field_reduce(1, [0])


def cyclotomic_field(d: int) -> FieldDescriptor:
    return field_of([cyclo_root(d)])


def real_cyclotomic(d: int) -> FieldDescriptor:
    """Q(zeta_d + zeta_d^-1)."""
    return field_of([cyclo_root(d, 1) + cyclo_root(d, -1)])


def quad(m: int) -> FieldDescriptor:
    if m in (0, 1) or not is_squarefree(m):
        raise ValueError(f"quad({m}) needs a squarefree m other than 0, 1")
    return field_of([sqrt_element(m)])


def sqrt_qstar(p: int, n: int = 1) -> FieldDescriptor:
    return field_of([sqrt_qstar_element(p, n)])


def real_cyclotomic_element(d: int) -> Cyclotomic:
    return cyclo_root(d, 1) + cyclo_root(d, -1)


def named_field(spec: str) -> FieldDescriptor:
    """Parse names such as ``Q``, ``Q(i)``, ``Q(zeta_8)``, ``real(5)``,
    ``quad(-2)``, ``sqrt_qstar(3,2)``."""
    s = spec.replace(" ", "")
    if s == "Q":
        return rational_field()
    if s == "Q(i)":
        return cyclotomic_field(4)
    if s.startswith("Q(zeta_") and s.endswith(")"):
        return cyclotomic_field(int(s[7:-1]))
    for prefix, fn in (("real(", real_cyclotomic), ("quad(", quad)):
        if s.startswith(prefix) and s.endswith(")"):
            return fn(int(s[len(prefix):-1]))
    if s.startswith("Q(sqrt(") and s.endswith("))"):
        return quad(int(s[7:-2]))
    if s.startswith("sqrt_qstar(") and s.endswith(")"):
        args = [int(x) for x in s[11:-1].split(",")]
        return sqrt_qstar(*args)
    raise ValueError(f"unrecognized field name {spec!r}")


def conjugates(a: Cyclotomic) -> set[tuple]:
    """Distinct Galois conjugates of a, as canonical coefficient tuples at a's level."""
    return {a.galois(s).coeffs for s in units(a.level)}


__all__ = [
    "ResidueGroup", "FieldDescriptor", "stabilizer", "field_of", "field_reduce",
    "fixed_field", "compositum", "unique_subfield", "named_field", "quad",
    "real_cyclotomic", "cyclotomic_field", "rational_field", "sqrt_qstar",
    "sqrt_qstar_element", "sqrt_element", "gauss_sum", "mult_order", "conjugates",
    "quadratic_radicand", "primitive_root", "root_sum",
]
