"""Invariant suites run by ``charfields selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors, is_prime, prime_powers_upto, units
from .cyclotomic import Cyclotomic, cyclotomic_polynomial
from .galois import ResidueGroup, field_reduce, sqrt_qstar_element, stabilizer
from .tables import gl2_table, orthogonality_defects, sl2_table
from .theorems import verify


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _random_element(rng: random.Random, n: int) -> Cyclotomic:
    terms = {rng.randrange(n): Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4)}
    return Cyclotomic.from_exponents(n, terms)


def galois_laws(seed: int = 0, trials: int = 40) -> Check:
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.choice([5, 8, 9, 12, 15, 20, 21, 24])
        a, b = _random_element(rng, n), _random_element(rng, n)
        s, t = rng.choice(units(n)), rng.choice(units(n))
        if a.galois(s) + b.galois(s) != (a + b).galois(s):
            return Check("galois: additive", False, f"n={n} s={s}")
        if a.galois(s) * b.galois(s) != (a * b).galois(s):
            return Check("galois: multiplicative", False, f"n={n} s={s}")
        if a.galois(t).galois(s) != a.galois(s * t % n):
            return Check("galois: composition", False, f"n={n} s={s} t={t}")
    return Check("galois action is a ring homomorphism and a group action", True, f"{trials} trials")


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def cyclotomic_polynomials(limit: int = 60) -> Check:
    from .arith import totient

    for n in range(1, limit + 1):
        acc = [1]
        for d in divisors(n):
            acc = _polymul(acc, cyclotomic_polynomial(d))
        if acc != [-1] + [0] * (n - 1) + [1]:
            return Check("Phi_n product identity", False, f"n={n}")
        if len(cyclotomic_polynomial(n)) - 1 != totient(n):
            return Check("Phi_n degree", False, f"n={n}")
    return Check("prod_{d|n} Phi_d = x^n - 1", True, f"n <= {limit}")


def gauss_squares(p_max: int = 23) -> Check:
    for p in filter(is_prime, range(3, p_max + 1)):
        for n in (1, 2):
            q = p**n
            qstar = q if q % 4 == 1 else -q
            g = sqrt_qstar_element(p, n)
            if g * g != qstar:
                return Check("Gauss sum squares", False, f"p={p} n={n}")
    return Check("Gauss sums square to q*", True, f"p <= {p_max}, n <= 2")


def stabilizer_and_reduce(seed: int = 1, trials: int = 30) -> Check:
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.choice([8, 12, 15, 20, 21, 24, 36])
        gens = [_random_element(rng, n) for _ in range(rng.randint(1, 2))]
        H = stabilizer(gens, n)
        S = set(H.elements)
        if any(a * b % n not in S for a in S for b in S):
            return Check("stabilizer closure", False, f"n={n}")
        fd = field_reduce(n, H)
        if field_reduce(fd) != fd or field_reduce(fd.conductor * 2, fd.lifted(fd.conductor * 2)) != fd:
            return Check("field_reduce idempotence", False, f"n={n}")
        sub = ResidueGroup.generated_by(n, [rng.choice(units(n))])
        if not sub.is_subgroup():
            return Check("generated subgroup", False, f"n={n}")
    return Check("stabilizers are subgroups; field_reduce is idempotent", True, f"{trials} trials")


def table_orthogonality(q_max: int = 9) -> Check:
    for q in prime_powers_upto(q_max):
        for t in (gl2_table(q), sl2_table(q)):
            d = orthogonality_defects(t)
            if d:
                return Check("orthogonality", False, f"{t}: {d[0]}")
    return Check("GL2/SL2 tables satisfy both orthogonality relations", True, f"q <= {q_max}")


def generator_independence() -> Check:
    params = {"q": 13, "ell": 7, "r": 1}
    a = verify("Thm4", params, generator_rank=0)
    b = verify("Thm4", params, generator_rank=1)
    ok = a.passed and b.passed and a.computed == b.computed
    return Check("Thm4 result independent of the field generator", ok, "q=13, ell^r=7")


def run_all(q_max: int = 9) -> list[Check]:
    return [
        galois_laws(),
        cyclotomic_polynomials(),
        gauss_squares(),
        stabilizer_and_reduce(),
        table_orthogonality(q_max),
        generator_independence(),
    ]
