"""Conjugacy classes and exact character tables of GL_2(F_q) and SL_2(F_q).

Everything is driven by discrete logarithms.  With eps the generator of
F_q^x and gamma the generator of F_{q^2}^x, a scalar x = eps^a and an element
zeta = gamma^b.  The embedding F_q -> F_{q^2} sends eps to gamma^((q+1)c) for
a unit c mod q - 1, which is all that is needed to evaluate characters of
F_{q^2}^x on F_q^x.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable

import numpy as np

from .arith import is_prime, lcm, prime_power, totient, units
from .cyclotomic import Cyclotomic, Number
from .finite_field import FqCtx, embedding, make_field
from .galois import FieldDescriptor, field_of, sqrt_qstar_element
from .limits import NoElementOfOrder


@dataclass(frozen=True)
class ConjClass:
    family: str
    params: tuple[int, ...]
    size: int
    order: int

    @property
    def label(self) -> str:
        return f"{self.family}{list(self.params)}"


@dataclass(frozen=True)
class CharId:
    family: str
    params: tuple[int, ...]
    degree: int

    @property
    def label(self) -> str:
        return f"{self.family}{list(self.params)}" if self.params else self.family


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def _order_mod(a: int, n: int) -> int:
    """Order of a in the additive group Z_n (= order of g^a for g of order n)."""
    return n // gcd(a, n)


class _Logs:
    """Discrete-log bookkeeping shared by the GL_2 and SL_2 builders."""

    def __init__(self, q: int, generator_rank: int = 0):
        pp = prime_power(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        self.p, self.n = pp
        self.q = q
        self.F: FqCtx = make_field(self.p, self.n, generator_rank)
        self.E: FqCtx = make_field(self.p, 2 * self.n, generator_rank)
        # eps -> gamma^((q+1) c)
        img = embedding(self.F, self.E)[self.F.generator.c]
        L = self.E.log(type(self.F.generator)(self.E, img))
        assert L % (q + 1) == 0
        self.c = (L // (q + 1)) % (q - 1) if q > 2 else 0
        self.cinv = pow(self.c, -1, q - 1) if q > 2 else 0

    def det_log(self, b: int) -> int:
        """eps-log of zeta^(q+1) for zeta = gamma^b."""
        return b * self.cinv % (self.q - 1) if self.q > 2 else 0


class CharacterTable:
    """Classes, irreducible characters and an exact value function."""

    def __init__(self, group: str, q: int, classes: list[ConjClass], chars: list[CharId],
                 value: Callable[[CharId, ConjClass], Cyclotomic], order: int):
        self.group = group
        self.q = q
        self.classes = classes
        self.chars = chars
        self._value = value
        self.order = order
        self.notes: list[str] = []
        self._cache: dict[tuple[CharId, ConjClass], Cyclotomic] = {}

    def __repr__(self):
        return f"<{self.group}(F_{self.q}): {len(self.classes)} classes>"

    def value(self, chi: CharId, c: ConjClass) -> Cyclotomic:
        key = (chi, c)
        v = self._cache.get(key)
        if v is None:
            v = self._cache[key] = self._value(chi, c)
        return v

    def values(self) -> list[list[Cyclotomic]]:
        return [[self.value(chi, c) for c in self.classes] for chi in self.chars]

    def classes_of_order(self, d: int) -> list[ConjClass]:
        return [c for c in self.classes if c.order == d]

    def field_generated(self, order: int | None = None) -> FieldDescriptor:
        """K(G), or K_d(G) when ``order`` is given."""
        classes = self.classes if order is None else self.classes_of_order(order)
        if not classes:
            raise NoElementOfOrder(f"{self.group}(F_{self.q}) has no element of order {order}")
        return field_of(self.value(chi, c) for c in classes for chi in self.chars)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "q": self.q,
            "order": self.order,
            "classes": [asdict(c) | {"params": list(c.params)} for c in self.classes],
            "characters": [asdict(x) | {"params": list(x.params)} for x in self.chars],
            "values": [[_value_json(v) for v in row] for row in self.values()],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    def to_text(self) -> str:
        lines = [f"{self.group}(F_{self.q}), |G| = {self.order}, "
                 f"{len(self.classes)} classes, {len(self.chars)} characters", ""]
        lines.append("classes:")
        for c in self.classes:
            lines.append(f"  {c.label:<16} size {c.size:<8} order {c.order}")
        lines.append("")
        lines.append("characters:")
        for chi in self.chars:
            lines.append(f"  {chi.label} (degree {chi.degree})")
            for c in self.classes:
                lines.append(f"    {c.label:<16} {self.value(chi, c)}")
        if self.notes:
            lines.append("")
            lines.append("notes:")
            lines.extend(f"  {n}" for n in self.notes)
        return "\n".join(lines) + "\n"


def _value_json(v: Cyclotomic) -> dict:
    return {"level": v.level, "coeffs": [str(c) for c in v.coeffs]}


def value_from_json(d: dict) -> Cyclotomic:
    return Cyclotomic(d["level"], [Fraction(c) for c in d["coeffs"]])


def field_from_dump(d: dict, order: int | None = None) -> FieldDescriptor:
    """Recompute K(G) or K_d(G) from a parsed JSON table dump."""
    cols = [i for i, c in enumerate(d["classes"]) if order is None or c["order"] == order]
    if not cols:
        raise NoElementOfOrder(f"no class of order {order} in dump")
    return field_of(value_from_json(row[i]) for row in d["values"] for i in cols)


def _zsum(n: int, exps: Iterable[int], coeff: Number = 1) -> Cyclotomic:
    acc: dict[int, Number] = {}
    for e in exps:
        acc[e % n] = acc.get(e % n, 0) + coeff
    return Cyclotomic.from_exponents(n, acc)


# -- GL_2 ---------------------------------------------------------------------

def gl2_order(q: int) -> int:
    return (q * q - 1) * (q * q - q)


def gl2_classes(q: int, generator_rank: int = 0) -> list[ConjClass]:
    """Classes a_x, b_x, c_{x,y}, d_zeta, parameters given as discrete logs."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    p = pp[0]
    N = q * q - 1
    out = []
    for a in range(q - 1):
        out.append(ConjClass("a", (a,), 1, _order_mod(a, q - 1)))
    for a in range(q - 1):
        out.append(ConjClass("b", (a,), q * q - 1, p * _order_mod(a, q - 1)))
    for a1 in range(q - 1):
        for a2 in range(a1 + 1, q - 1):
            o = lcm(_order_mod(a1, q - 1), _order_mod(a2, q - 1))
            out.append(ConjClass("c", (a1, a2), q * q + q, o))
    for b in range(N):
        if b % (q + 1) == 0 or b * q % N < b:
            continue
        out.append(ConjClass("d", (b,), q * q - q, _order_mod(b, N)))
    return out


def gl2_characters(q: int) -> list[CharId]:
    N = q * q - 1
    out = [CharId("U", (k,), 1) for k in range(1, q)]
    out += [CharId("V", (k,), q) for k in range(1, q)]
    out += [CharId("W", (j, k), q + 1) for j in range(1, q) for k in range(j + 1, q)]
    out += [CharId("X", (u,), q - 1) for u in range(N) if u % (q + 1) and u * q % N >= u]
    return out


def _gl2_value_fn(lg: _Logs):
    q = lg.q
    N = q * q - 1
    s = q + 1  # alpha exponents live at level q - 1 = N / s

    def value(chi: CharId, c: ConjClass) -> Cyclotomic:
        f, P = chi.family, chi.params
        if c.family in ("a", "b"):
            a = c.params[0]
            xs = (a, a)
        elif c.family == "c":
            xs = c.params
        else:
            b = c.params[0]
        if f in ("U", "V"):
            j = P[0] - 1
            if c.family == "d":
                e = j * lg.det_log(b) * s
                return _zsum(N, [e], 1 if f == "U" else -1)
            e = j * (xs[0] + xs[1]) * s
            if f == "U" or c.family == "c":
                return _zsum(N, [e])
            return _zsum(N, [e], q) if c.family == "a" else _zsum(N, [])
        if f == "W":
            j, k = P[0] - 1, P[1] - 1
            if c.family == "d":
                return _zsum(N, [])
            x, y = xs
            if c.family == "c":
                return _zsum(N, [(j * x + k * y) * s, (j * y + k * x) * s])
            return _zsum(N, [(j + k) * x * s], q + 1 if c.family == "a" else 1)
        if f == "X":
            u = P[0]
            if c.family == "c":
                return _zsum(N, [])
            if c.family == "d":
                return _zsum(N, [u * b, u * b * q], -1)
            e = u * s * lg.c * xs[0]
            return _zsum(N, [e], q - 1 if c.family == "a" else -1)
        raise ValueError(f"unknown character family {f}")

    return value


@lru_cache(maxsize=None)
def gl2_table(q: int, generator_rank: int = 0) -> CharacterTable:
    lg = _Logs(q, generator_rank)
    return CharacterTable("GL2", q, gl2_classes(q, generator_rank), gl2_characters(q),
                          _gl2_value_fn(lg), gl2_order(q))


def gl2_char_value(q: int, chi: CharId, c: ConjClass, generator_rank: int = 0) -> Cyclotomic:
    return gl2_table(q, generator_rank).value(chi, c)


# -- SL_2 ---------------------------------------------------------------------

def sl2_order(q: int) -> int:
    return q * (q * q - 1)


def sl2_classes(q: int) -> list[ConjClass]:
    """Tables 3 (odd q) and 5 (even q) of the standard SL_2 class list.

    Families: ``z`` central (+/-I, param sign), ``b`` unipotent-type b_{x,y}
    (params sign of x, 0 for y = 1 / 1 for y = eps), ``c`` split torus (eps-log
    a, paired with -a), ``d`` nonsplit torus zeta = gamma^((q-1)t) (paired t, -t).
    """
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    p = pp[0]
    out = []
    if p == 2:
        out.append(ConjClass("z", (1,), 1, 1))
        out.append(ConjClass("b", (1, 0), q * q - 1, 2))
        for a in range(1, q - 1):
            if a <= (-a) % (q - 1):
                out.append(ConjClass("c", (a,), q * q + q, _order_mod(a, q - 1)))
        for t in range(1, q + 1):
            if t <= (-t) % (q + 1):
                out.append(ConjClass("d", (t,), q * q - q, _order_mod(t, q + 1)))
        return out
    out.append(ConjClass("z", (1,), 1, 1))
    out.append(ConjClass("z", (-1,), 1, 2))
    for sgn in (1, -1):
        for y in (0, 1):
            out.append(ConjClass("b", (sgn, y), (q * q - 1) // 2, p if sgn == 1 else 2 * p))
    h = (q - 1) // 2
    for a in range(1, q - 1):
        if a != h and a < (-a) % (q - 1):
            out.append(ConjClass("c", (a,), q * q + q, _order_mod(a, q - 1)))
    k = (q + 1) // 2
    for t in range(1, q + 1):
        if t != k and t < (-t) % (q + 1):
            out.append(ConjClass("d", (t,), q * q - q, _order_mod(t, q + 1)))
    return out


def sl2_characters(q: int) -> list[CharId]:
    out = [CharId("U", (), 1), CharId("V", (), q)]
    if q % 2 == 0:
        out += [CharId("W", (j,), q + 1) for j in range(1, q - 1) if j <= (-j) % (q - 1)]
        out += [CharId("X", (u,), q - 1) for u in range(1, q + 1) if u <= (-u) % (q + 1)]
        return out
    h, k = (q - 1) // 2, (q + 1) // 2
    out += [CharId("W", (j,), q + 1) for j in range(1, q - 1) if j != h and j < (-j) % (q - 1)]
    out += [CharId("X", (u,), q - 1) for u in range(1, q + 1) if u != k and u < (-u) % (q + 1)]
    out += [CharId("W'", (), (q + 1) // 2), CharId("W''", (), (q + 1) // 2),
            CharId("X'", (), (q - 1) // 2), CharId("X''", (), (q - 1) // 2)]
    return out


def _sl2_even_value_fn(q: int):
    def value(chi: CharId, c: ConjClass) -> Cyclotomic:
        f, cf = chi.family, c.family
        if f == "U":
            return Cyclotomic.rational(1)
        if f == "V":
            return Cyclotomic.rational({"z": q, "b": 0, "c": 1, "d": -1}[cf])
        if f == "W":
            j = chi.params[0]
            if cf == "c":
                a = c.params[0]
                return _zsum(q - 1, [j * a, -j * a])
            return Cyclotomic.rational({"z": q + 1, "b": 1, "d": 0}[cf])
        if f == "X":
            u = chi.params[0]
            if cf == "d":
                t = c.params[0]
                return _zsum(q + 1, [u * t, -u * t], -1)
            return Cyclotomic.rational({"z": q - 1, "b": -1, "c": 0}[cf])
        raise ValueError(f"unknown character family {f}")

    return value


class _OddSL2:
    """Value function for odd q, including the split characters."""

    def __init__(self, q: int, generator_rank: int = 0):
        self.q = q
        pp = prime_power(q)
        self.p, self.n = pp
        self.G = sqrt_qstar_element(self.p, self.n)
        self.split, self.notes = resolve_split_values(q, self.G)

    # characters of F_q^x and C on the relevant elements
    def tau_sign(self, s: int) -> int:
        """tau(+/-1)."""
        return 1 if s == 1 else (-1) ** ((self.q - 1) // 2)

    def psi_sign(self, s: int) -> int:
        """psi(+/-1), psi the quadratic character of C (cyclic of order q+1)."""
        return 1 if s == 1 else (-1) ** ((self.q + 1) // 2)

    def __call__(self, chi: CharId, c: ConjClass) -> Cyclotomic:
        q = self.q
        f, cf = chi.family, c.family
        if f in ("W'", "W''", "X'", "X''"):
            return self.split[(f, cf, c.params)]
        if f == "U":
            return Cyclotomic.rational(1)
        if f == "V":
            return Cyclotomic.rational({"z": q, "b": 0, "c": 1, "d": -1}[cf])
        if f == "W":
            j = chi.params[0]
            if cf == "z":
                return Cyclotomic.rational((q + 1) * (1 if c.params[0] == 1 else (-1) ** j))
            if cf == "b":
                return Cyclotomic.rational(1 if c.params[0] == 1 else (-1) ** j)
            if cf == "c":
                a = c.params[0]
                return _zsum(q - 1, [j * a, -j * a])
            return Cyclotomic.rational(0)
        if f == "X":
            u = chi.params[0]
            phi_m1 = (-1) ** u  # phi(-1): -1 = gamma^((q-1)(q+1)/2)
            if cf == "z":
                return Cyclotomic.rational((q - 1) * (1 if c.params[0] == 1 else phi_m1))
            if cf == "b":
                return Cyclotomic.rational(-(1 if c.params[0] == 1 else phi_m1))
            if cf == "c":
                return Cyclotomic.rational(0)
            t = c.params[0]
            return _zsum(q + 1, [u * t, -u * t], -1)
        raise ValueError(f"unknown character family {f}")


def resolve_split_values(q: int, G: Cyclotomic) -> tuple[dict, list[str]]:
    """Values of W', W'', X', X'' for odd q.

    The printed table is taken literally where it can be evaluated.  The
    entries it leaves inconsistent are fixed by two rules: on classes that do
    not split, each constituent is half of its parent (W_tau or X_psi); on
    every class, the two constituents sum to the parent.  Each departure from
    the literal entry is recorded in the returned notes.  Orthogonality of the
    finished table is checked separately.
    """
    half = Fraction(1, 2)
    tau_m1 = (-1) ** ((q - 1) // 2)
    psi_m1 = (-1) ** ((q + 1) // 2)
    tau = {1: 1, -1: tau_m1}
    psi = {1: 1, -1: psi_m1}
    R = Cyclotomic.rational
    notes: list[str] = []
    classes = sl2_classes(q)

    def parent(fam: str, c: ConjClass) -> Cyclotomic:
        cf = c.family
        if fam == "W":  # W_tau restricted
            if cf == "z":
                return R((q + 1) * tau[c.params[0]])
            if cf == "b":
                return R(tau[c.params[0]])
            if cf == "c":
                return R(2 * (-1) ** c.params[0])
            return R(0)
        if cf == "z":  # X_psi restricted
            return R((q - 1) * psi[c.params[0]])
        if cf == "b":
            return R(-psi[c.params[0]])
        if cf == "c":
            return R(0)
        return R(-2 * (-1) ** c.params[0])

    def literal(name: str, c: ConjClass):
        """Printed entry, or None where it cannot be evaluated."""
        cf = c.family
        if name in ("W'", "W''"):
            if cf == "z":
                return R(Fraction(q + 1, 2) * tau[c.params[0]])
            if cf == "b":
                s, y = c.params
                sign = 1 if name == "W'" else -1
                ty = 1 if y == 0 else -1
                return (1 + G * (sign * ty)) * (half * tau[s])
            if cf == "c":
                return R((-1) ** c.params[0])
            return R(0)
        if cf == "z":
            return R(Fraction(q - 1, 2) * psi[c.params[0]])
        if cf == "b":
            s, y = c.params
            sign = 1 if name == "X'" else -1
            ty = 1 if y == 0 else -1
            return (-1 + G * (sign * ty)) * (half * tau[s])
        if cf == "c":
            return R(0)
        if name == "X''":
            return R(-((-1) ** c.params[0]))
        return None  # X' at d_zeta is printed as -psi(y)

    out = {}
    for pair, fam in ((("W'", "W''"), "W"), (("X'", "X''"), "X")):
        a, b = pair
        for c in classes:
            par = parent(fam, c)
            if c.family != "b":
                for name in pair:
                    lit = literal(name, c)
                    val = par * half
                    if lit is None:
                        notes.append(f"{name} at {c.label}: printed entry is not evaluable; using half of {fam}")
                    elif lit != val:
                        notes.append(f"{name} at {c.label}: printed {lit}, resolved {val}")
                    out[(name, c.family, c.params)] = val
                continue
            # split class: keep the printed radical part, choose the central
            # prefactor so that the constituents add up to the parent
            s, y = c.params
            va, vb = literal(a, c), literal(b, c)
            if va + vb != par:
                alt = psi[s] * tau[s]  # switch the prefactor tau(x) -> psi(x)
                va2, vb2 = va * alt, vb * alt
                if va2 + vb2 != par:
                    raise ArithmeticError(f"no consistent split values for {pair} at {c.label}")
                notes.append(f"{a}/{b} at {c.label}: printed prefactor tau(x), resolved psi(x)")
                va, vb = va2, vb2
            out[(a, c.family, c.params)] = va
            out[(b, c.family, c.params)] = vb
    return out, notes


@lru_cache(maxsize=None)
def sl2_table(q: int, generator_rank: int = 0) -> CharacterTable:
    classes = sl2_classes(q)
    chars = sl2_characters(q)
    if q % 2 == 0:
        return CharacterTable("SL2", q, classes, chars, _sl2_even_value_fn(q), sl2_order(q))
    fn = _OddSL2(q, generator_rank)
    t = CharacterTable("SL2", q, classes, chars, fn, sl2_order(q))
    t.notes.extend(fn.notes)
    return t


def sl2_char_value(q: int, chi: CharId, c: ConjClass) -> Cyclotomic:
    return sl2_table(q).value(chi, c)


def table(group: str, q: int, generator_rank: int = 0) -> CharacterTable:
    g = group.upper()
    if g == "GL2":
        return gl2_table(q, generator_rank)
    if g == "SL2":
        return sl2_table(q, generator_rank)
    raise ValueError(f"unknown group {group!r}")


def field_generated(group: str, q: int, order: int | None = None, generator_rank: int = 0) -> FieldDescriptor:
    """K(G) or K_d(G) for G = GL_2(F_q) or SL_2(F_q)."""
    return table(group, q, generator_rank).field_generated(order)


# -- orthogonality --------------------------------------------------------------

def _find_prime(L: int, lower: int) -> int:
    k = max(1, lower // L + 1)
    while True:
        P = k * L + 1
        if is_prime(P):
            return P
        k += 1


def _root_of_unity(L: int, P: int) -> int:
    from .arith import factorize

    for g in range(2, P):
        w = pow(g, (P - 1) // L, P)
        if all(pow(w, L // ell, P) != 1 for ell, _ in factorize(L)) if L > 1 else True:
            return w
    raise AssertionError("no primitive root of unity found")


def orthogonality_defects(t: CharacterTable) -> list[str]:
    """Exact check of both orthogonality relations; returns the failures.

    Works through the reductions of Z[zeta_L] modulo a prime P = 1 (mod L),
    one for each embedding zeta_L -> w^j.  A sum S of products of character
    values is an algebraic integer with |sigma(S)| < P/2 for every complex
    embedding sigma (P is chosen above 2|G| max(deg)^2 + |G|).  If S - target
    vanishes under all reductions it lies in P Z[zeta_L], and then its norm is
    divisible by P^phi(L) while being smaller in absolute value, so S equals
    the target exactly.
    """
    vals = t.values()
    L = lcm(*(v.level for row in vals for v in row))
    maxdeg = max(chi.degree for chi in t.chars)
    P = _find_prime(L, 2 * t.order * (maxdeg * maxdeg + 1))
    w = _root_of_unity(L, P)
    nchar, ncls = len(t.chars), len(t.classes)
    big = ncls * P * P >= 2**62 or nchar * P * P >= 2**62
    dtype = object if big else np.int64
    sizes = np.array([c.size % P for c in t.classes], dtype=dtype)
    defects = []

    def reduce_all(j: int) -> np.ndarray:
        M = np.zeros((nchar, ncls), dtype=dtype)
        wj = pow(w, j % L, P)
        for r, row in enumerate(vals):
            for s, v in enumerate(row):
                step = pow(wj, L // v.level, P)
                acc = 0
                x = 1
                for coef in v.coeffs:
                    if coef:
                        if isinstance(coef, Fraction):
                            acc += coef.numerator * pow(coef.denominator, -1, P) * x
                        else:
                            acc += coef * x
                    x = x * step % P
                M[r, s] = acc % P
        return M

    cache: dict[int, np.ndarray] = {}

    def M(j: int) -> np.ndarray:
        j %= L
        if j not in cache:
            cache[j] = reduce_all(j)
        return cache[j]

    expected_row = np.eye(nchar, dtype=dtype) * (t.order % P)
    expected_col = np.diag([t.order // c.size % P for c in t.classes]).astype(dtype)
    for j in units(L):
        A, B = M(j), M(-j)
        row = (A * sizes % P).dot(B.T) % P
        col = A.T.dot(B) % P
        if not np.array_equal(row, expected_row):
            bad = np.argwhere(row != expected_row)[0]
            defects.append(f"row orthogonality fails at {t.chars[bad[0]].label}, {t.chars[bad[1]].label}")
            break
        if not np.array_equal(col, expected_col):
            bad = np.argwhere(col != expected_col)[0]
            defects.append(f"column orthogonality fails at {t.classes[bad[0]].label}, {t.classes[bad[1]].label}")
            break
    return defects


def orthogonality_direct(t: CharacterTable) -> list[str]:
    """Both orthogonality relations evaluated in cyclotomic arithmetic (small q)."""
    vals = t.values()
    conj = [[v.conjugate() for v in row] for row in vals]
    defects = []
    for i in range(len(t.chars)):
        for j in range(i, len(t.chars)):
            s = Cyclotomic.rational(0)
            for k, c in enumerate(t.classes):
                s = s + vals[i][k] * conj[j][k] * c.size
            if s != (t.order if i == j else 0):
                defects.append(f"row {t.chars[i].label}, {t.chars[j].label}: {s}")
    for a in range(len(t.classes)):
        for b in range(a, len(t.classes)):
            s = Cyclotomic.rational(0)
            for i in range(len(t.chars)):
                s = s + vals[i][a] * conj[i][b]
            if s != (t.order // t.classes[a].size if a == b else 0):
                defects.append(f"column {t.classes[a].label}, {t.classes[b].label}: {s}")
    return defects


def printed_census(q: int) -> dict[tuple[str, int], Fraction]:
    """Per-order class counts as given by the published counting formulas."""
    from .arith import divisors

    p = prime_power(q)[0]
    out: dict[tuple[str, int], Fraction] = {}
    for d in divisors(q - 1):
        phi = totient(d)
        out[("a", d)] = Fraction(phi)
        out[("b", p * d)] = Fraction(phi)
        if d > 1:
            out[("c", d)] = phi * (d - Fraction(phi + 1, 2))
    for d in divisors(q * q - 1):
        if (q - 1) % d:
            out[("d", d)] = Fraction(totient(d), 2)
    return out


def jordan_totient(k: int, n: int) -> int:
    from .arith import factorize

    r = n**k
    for ell, _ in factorize(n):
        r = r // ell**k * (ell**k - 1)
    return r


def true_census(q: int) -> dict[tuple[str, int], Fraction]:
    """Same table with the c-count replaced by unordered pairs of lcm-order d."""
    out = printed_census(q)
    for key in list(out):
        if key[0] == "c":
            d = key[1]
            out[key] = Fraction(jordan_totient(2, d) - totient(d), 2)
    return out


def census_defects(q: int, expected: dict | None = None) -> list[str]:
    """Compare per-order GL_2 class counts with ``expected`` (default: printed formulas)."""
    from collections import Counter

    want = printed_census(q) if expected is None else expected
    got = Counter((c.family, c.order) for c in gl2_classes(q))
    out = []
    for key in sorted(set(want) | set(got)):
        if got.get(key, 0) != want.get(key, 0):
            out.append(f"{key[0]} classes of order {key[1]}: {got.get(key, 0)} found, {want.get(key, 0)} expected")
    return out
