"""Small integer number theory used throughout the package."""

from __future__ import annotations

from functools import lru_cache
from math import gcd


def lcm(*args: int) -> int:
    out = 1
    for a in args:
        out = out * a // gcd(out, a)
    return out


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, as ``((p, e), ...)``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, n)`` with ``q == p**n`` or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    return f[0] if len(f) == 1 else None


def prime_powers_upto(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if prime_power(q)]


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return tuple(sorted(ds))


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def units(n: int) -> list[int]:
    """Residues in Z_n^x; for n == 1 this is ``[0]`` (the trivial group)."""
    if n == 1:
        return [0]
    return [a for a in range(1, n) if gcd(a, n) == 1]


def mult_order(q: int, n: int) -> int:
    """Smallest k >= 1 with q**k == 1 (mod n)."""
    if n < 1 or gcd(q, n) != 1:
        raise ValueError(f"{q} is not a unit modulo {n}")
    if n == 1:
        return 1
    k = totient(n)
    for p, _ in factorize(k):
        while k % p == 0 and pow(q, k // p, n) == 1:
            k //= p
    return k


def element_order(a: int, n: int) -> int:
    """Order of ``a`` in the additive group Z_n."""
    return n // gcd(a, n)


def is_squarefree(m: int) -> bool:
    if m == 0:
        return False
    return abs(m) == 1 or all(e == 1 for _, e in factorize(abs(m)))


def legendre(a: int, p: int) -> int:
    """Legendre symbol via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def star(m: int) -> int:
    """Signed odd integer m* = (-1)**((m-1)/2) * m."""
    if m % 2 == 0:
        raise ValueError("m* is defined for odd m only")
    return m if m % 4 == 1 else -m
