"""Acceptance criteria 1-9, at zero tolerance.

Each test records its outcome under its criterion number; the terminal summary
(see conftest.py) prints one PASS/FAIL line per criterion.

Criteria 3 and 6 are false for some parameters.  Those cases are strict xfails
chosen by a mathematical predicate stated next to them, so the summary still
reports the criterion as FAIL and an unexpected pass breaks the run.
"""

from collections import defaultdict
from math import gcd

import pytest

from charfields.arith import divisors, factorize, mult_order, prime_powers_upto, totient
from charfields.galois import cyclotomic_field, fixed_field, quad, rational_field, unique_subfield
from charfields.selftest import run_all
from charfields.tables import census_defects, gl2_table, orthogonality_defects, sl2_table
from charfields.theorems import sweep, verify

RESULTS: dict[int, list[tuple[str, bool]]] = defaultdict(list)


def record(criterion, label, ok):
    RESULTS[criterion].append((label, bool(ok)))
    assert ok, label


# 1 ---------------------------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13])
def test_c1_gl2_integrity(q):
    t = gl2_table(q)
    order = (q * q - 1) * (q * q - q)
    ok = (len(t.classes) == q * q - 1 == len(t.chars)
          and sum(c.size for c in t.classes) == order
          and sum(x.degree ** 2 for x in t.chars) == order
          and orthogonality_defects(t) == [])
    record(1, f"GL2 q={q}", ok)


# 2 ---------------------------------------------------------------------------

@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 2, 4, 8])
def test_c2_sl2_integrity(q):
    t = sl2_table(q)
    n_cls = q + 4 if q % 2 else q + 1
    known = ("printed prefactor tau(x), resolved psi(x)", "printed entry is not evaluable")
    ok = (len(t.classes) == n_cls == len(t.chars)
          and sum(c.size for c in t.classes) == q * (q * q - 1)
          and sum(x.degree ** 2 for x in t.chars) == t.order
          and orthogonality_defects(t) == []
          and all(any(k in n for k in known) for n in t.notes))
    record(2, f"SL2 q={q}", ok)


# 3 ---------------------------------------------------------------------------

def _census_formula_false(q):
    """The printed c-count only counts pairs where one entry has order d.

    That matches lcm-order d exactly when d is a prime power.
    """
    return any(len(factorize(d)) > 1 for d in divisors(q - 1))


C3_CASES = [pytest.param(q, marks=pytest.mark.xfail(strict=True, reason="printed c-count misses "
                                                    "pairs of coprime orders"))
            if _census_formula_false(q) else q for q in prime_powers_upto(13)]


@pytest.mark.parametrize("q", C3_CASES)
def test_c3_order_census(q):
    defects = census_defects(q)
    record(3, f"census q={q}: {defects or 'ok'}", not defects)


# 4 ---------------------------------------------------------------------------

def test_c4_theorem4_sweep():
    res = sweep(["Thm4"], q_max=13, ellr_max=27)
    seen = {(r.params["q"], r.params["ell"] ** r.params["r"]) for r in res}
    named = {(7, 3), (5, 3), (3, 3), (4, 5), (9, 5), (13, 7)}
    cases = {q % n if q % n in (0, 1) else -1 for q, n in seen}
    ok = all(r.passed for r in res) and named <= seen and cases == {0, 1, -1}
    record(4, f"Thm4: {len(res)} instances", ok)


# 5 ---------------------------------------------------------------------------

@pytest.mark.parametrize("q,expected", [(17, cyclotomic_field(8)), (11, quad(-2)),
                                        (13, fixed_field(4, [1])), (7, quad(2))])
def test_c5_k8(q, expected):
    r = verify("K8-table", {"q": q})
    record(5, f"K8 q={q}", r.passed and r.computed == expected)


@pytest.mark.parametrize("r", [3, 4])
def test_c5_two_power_remark(r):
    n = 2**r
    qs = [q for q in prime_powers_upto(17) if q % 2 and q % n in (n // 2 - 1, n // 2 + 1)]
    res = [verify("2r-remark", {"q": q, "r": r}) for q in qs]
    record(5, f"2^r remark r={r} q={qs}", qs and all(x.passed for x in res))


# 6 ---------------------------------------------------------------------------

LEMMA_CASES = [(ell, r, q) for ell, r in [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)]
               for q in prime_powers_upto(16) if gcd(q, ell) == 1]


def _period_vanishes(ell, r, q):
    """ell | ord_{ell^r}(q) kills the top-level period; harmless only when the target is Q."""
    k = mult_order(q, ell**r)
    return r >= 2 and k % ell == 0 and k < totient(ell**r)


C6_CASES = [pytest.param(ell, r, q, id=f"{ell**r}-q{q}",
                         marks=[pytest.mark.xfail(strict=True, reason="top-level period is zero")]
                         if _period_vanishes(ell, r, q) else [])
            for ell, r, q in LEMMA_CASES]


@pytest.mark.parametrize("ell,r,q", C6_CASES)
def test_c6_lemma31(ell, r, q):
    res = verify("Lemma3.1", {"q": q, "ell": ell, "r": r})
    record(6, f"Lemma3.1 ell^r={ell**r} q={q}: {res.notes[-1]}", res.passed)


# 7 ---------------------------------------------------------------------------

SL_QS = [3, 5, 7, 9, 11, 13, 2, 4, 8]


@pytest.mark.parametrize("q", SL_QS)
def test_c7_theorems_5_6(q):
    r5 = verify("Thm5", {"q": q})
    r6 = [x for x in sweep(["Thm6"], q_max=q, ellr_max=27) if x.params["q"] == q]
    record(7, f"Thm5/Thm6 q={q}", r5.passed and r6 and all(x.passed for x in r6))


def test_c7_named_instances():
    a = verify("Thm6", {"q": 5, "ell": 5, "r": 1})
    b = verify("Thm6", {"q": 9, "ell": 3, "r": 1})
    record(7, "Thm6 q=5 ell^r=5 and q=9 ell^r=3",
           a.passed and a.computed == quad(5) and b.passed and b.computed == rational_field())


# 8 ---------------------------------------------------------------------------

@pytest.mark.parametrize("q", prime_powers_upto(13))
def test_c8_theorems_1_3(q):
    a = verify("Thm1", {"m": 2, "q": q})
    b = verify("Thm3", {"q": q})
    record(8, f"Thm1/Thm3 q={q}", a.passed and b.passed and a.computed == b.predicted)


def test_c8_theorem2_m3():
    a = verify("Thm2", {"m": 3, "q": 2, "ell": 7, "r": 1})
    b = verify("Thm2", {"m": 3, "q": 3, "ell": 13, "r": 1})
    ok = (a.passed and a.computed == quad(-7) and a.computed.degree == 2 == totient(7) // 3
          and b.passed and b.computed.degree == 4 and b.computed == unique_subfield(13, 1, 4))
    record(8, "Thm2 m=3: (2,7) and (3,13)", ok)


# 9 ---------------------------------------------------------------------------

def test_c9_selftest():
    checks = run_all(9)
    record(9, "; ".join(c.line() for c in checks), all(c.ok for c in checks))


def summary_lines() -> list[str]:
    lines = []
    for c in sorted(RESULTS):
        items = RESULTS[c]
        bad = [label for label, ok in items if not ok]
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {c}: {status} ({len(items) - len(bad)}/{len(items)})"
        if bad:
            line += "  failing: " + " | ".join(bad)
        lines.append(line)
    return lines

