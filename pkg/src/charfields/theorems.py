"""Predicted versus computed character fields, claim by claim.

Each claim id has a predictor (built from named fields only) and a computed
side (character tables for rank 2, period products for GL_m).  ``verify``
compares the two canonical descriptors; ``sweep`` runs a parameter grid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .arith import divisors, factorize, is_prime, mult_order, prime_power, prime_powers_upto, totient
from .cyclotomic import Cyclotomic, root_sum
from .galois import (
    FieldDescriptor,
    compositum,
    cyclotomic_field,
    field_of,
    fixed_field,
    quad,
    rational_field,
    real_cyclotomic,
    sqrt_qstar,
    unique_subfield,
)
from .glm import (
    exists_order,
    k_ellr_glm,
    k_glm,
    lemma31_details,
    lemma31_tuples,
    tau_fixed_field,
)
from .limits import IndeterminateField, NoElementOfOrder
from .tables import gl2_table, sl2_table

CLAIMS = (
    "Thm1", "Thm2", "Thm2-tau", "Thm3", "Thm4", "Thm4-ell2", "2r-remark", "K8-table",
    "small-d", "L1", "L2", "K2-remark", "K4-remark", "Kp-remark", "Thm5", "Thm6", "Lemma3.1",
)


@dataclass
class VerificationResult:
    claim: str
    params: dict
    computed: FieldDescriptor | None
    predicted: FieldDescriptor | None
    status: str  # pass | fail | skipped
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": dict(self.params),
            "computed": None if self.computed is None else self.computed.to_dict(),
            "predicted": None if self.predicted is None else self.predicted.to_dict(),
            "status": self.status,
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        comp = "-" if self.computed is None else _short(self.computed)
        pred = "-" if self.predicted is None else _short(self.predicted)
        line = f"{self.status.upper():<7} {self.claim:<10} {ps:<28} computed {comp}  predicted {pred}"
        return "\n".join([line] + [f"        note: {n}" for n in self.notes])


def _short(fd: FieldDescriptor) -> str:
    return fd.names()[0]


def _ellr(params: dict) -> tuple[int, int]:
    return params["ell"], params["r"]


# -- predictors ---------------------------------------------------------------

def _thm3_field(q: int) -> FieldDescriptor:
    N = q * q - 1
    gens = [root_sum(q - 1, [1])] + [root_sum(N, [r, q * r]) for r in range(1, N // 2 + 1)]
    return field_of(gens)


def _l2_field(q: int, d: int) -> FieldDescriptor:
    return field_of(root_sum(d, [r, q * r]) for r in range(1, d + 1))


def _thm4_case(q: int, n: int) -> str | None:
    if q % n == 1 % n:
        return "1"
    if q % n == n - 1:
        return "-1"
    if q % n == 0:
        return "0"
    return None


def predict(claim: str, params: dict) -> FieldDescriptor:
    """The field the claim asserts, for the given parameters."""
    q = params.get("q")
    if claim == "Thm1":
        return k_glm(params["m"], q)
    if claim == "Thm2":
        ell, r = _ellr(params)
        n = ell**r
        return unique_subfield(ell, r, totient(n) // mult_order(q, n))
    if claim == "Thm2-tau":
        ell, r = _ellr(params)
        return tau_fixed_field(q, ell, r)
    if claim == "Thm3":
        return _thm3_field(q)
    if claim in ("Thm4", "Thm4-ell2"):
        ell, r = _ellr(params)
        n = ell**r
        case = _thm4_case(q, n)
        if case == "1":
            return cyclotomic_field(n)
        if case == "-1":
            return real_cyclotomic(n)
        if case == "0":
            return rational_field()
        raise ValueError(f"q={q} is not 0 or +-1 mod {n}")
    if claim == "2r-remark":
        r = params["r"]
        n = 2**r
        if q % n == n // 2 - 1:
            diff = root_sum(n, [1]) - root_sum(n, [n - 1])
            return compositum(real_cyclotomic(n // 2), field_of([diff]))
        if q % n == n // 2 + 1:
            return cyclotomic_field(n // 2)
        raise ValueError(f"q={q} is not 2^(r-1) +- 1 mod 2^r")
    if claim == "K8-table":
        return {1: cyclotomic_field(8), 3: quad(-2), 5: fixed_field(4, [1]), 7: quad(2)}[q % 8]
    if claim == "small-d":
        d = params["d"]
        if q % d != d - 1:
            raise ValueError(f"q={q} is not -1 mod {d}")
        return quad(5) if d == 5 else rational_field()
    if claim == "L1":
        return cyclotomic_field(params["d"])
    if claim == "L2":
        return _l2_field(q, params["d"])
    if claim == "K2-remark":
        return rational_field()
    if claim == "K4-remark":
        return fixed_field(4, [1]) if q % 4 == 1 else rational_field()
    if claim == "Kp-remark":
        return rational_field()
    if claim == "Thm5":
        p, nn = prime_power(q)
        parts = [real_cyclotomic(q - 1), real_cyclotomic(q + 1)]
        if p > 2:
            parts.append(sqrt_qstar(p, nn))
        return compositum(*parts)
    if claim == "Thm6":
        ell, r = _ellr(params)
        n = ell**r
        p, nn = prime_power(q)
        if q % n in (1 % n, n - 1):
            return real_cyclotomic(n)
        if q % n == 0:
            return rational_field() if p == 2 else sqrt_qstar(p, nn)
        raise ValueError(f"q={q} is not 0 or +-1 mod {n}")
    if claim == "Lemma3.1":
        ell, r = _ellr(params)
        return tau_fixed_field(q, ell, r)
    raise ValueError(f"unknown claim {claim!r}")


# -- verification ---------------------------------------------------------------

def _outside(t, order: int | None, fd: FieldDescriptor, limit: int = 3) -> list[str]:
    """A few table values (with their class and character) that are not in fd."""
    out = []
    classes = t.classes if order is None else t.classes_of_order(order)
    for c in classes:
        for chi in t.chars:
            v = t.value(chi, c)
            if not (field_of([v]) <= fd):
                out.append(f"{chi.label} at {c.label} = {v}")
                if len(out) >= limit:
                    return out
    return out


def _result(claim, params, computed, predicted, notes=(), table=None, order=None):
    status = "pass" if computed == predicted else "fail"
    notes = list(notes)
    if status == "fail":
        notes.append(f"computed {computed.to_dict()} vs predicted {predicted.to_dict()}")
        if table is not None:
            notes.extend(f"outside prediction: {s}" for s in _outside(table, order, predicted))
    return VerificationResult(claim, params, computed, predicted, status, notes)


def _skip(claim, params, reason):
    return VerificationResult(claim, params, None, None, "skipped", [reason])


def _table_claim(claim, params, t, order, notes=()):
    try:
        computed = t.field_generated(order)
    except NoElementOfOrder as e:
        return _skip(claim, params, str(e))
    return _result(claim, params, computed, predict(claim, params), notes, t, order)


def verify(claim: str, params: dict, generator_rank: int = 0) -> VerificationResult:
    """Compute both sides of one claim instance and compare them."""
    params = dict(params)
    q = params.get("q")
    if q is not None and prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    gl = (lambda: gl2_table(q, generator_rank))
    if claim == "Thm1":
        m = params.setdefault("m", 2)
        if m != 2:
            return _skip(claim, params, "no full character table for m > 2")
        return _table_claim(claim, params, gl(), None)
    if claim in ("Thm2", "Thm2-tau"):
        ell, r = _ellr(params)
        m = params.setdefault("m", 2)
        if ell % 2 == 0 or ell == prime_power(q)[0]:
            raise ValueError("needs an odd prime ell different from the characteristic")
        if not exists_order(m, q, ell, r):
            return _skip(claim, params, f"no element of order {ell**r} in GL_{m}")
        if m == 2:
            return _table_claim(claim, params, gl(), ell**r)
        return _result(claim, params, k_ellr_glm(m, q, ell, r), predict(claim, params))
    if claim in ("Thm3",):
        return _table_claim(claim, params, gl(), None)
    if claim in ("Thm4", "Thm4-ell2"):
        ell, r = _ellr(params)
        if not exists_order(2, q, ell, r):
            return _skip(claim, params, f"no element of order {ell**r} in GL_2")
        return _table_claim(claim, params, gl(), ell**r)
    if claim == "2r-remark":
        return _table_claim(claim, params, gl(), 2 ** params["r"])
    if claim == "K8-table":
        return _table_claim(claim, params, gl(), 8)
    if claim in ("small-d", "L2"):
        return _table_claim(claim, params, gl(), params["d"])
    if claim == "L1":
        return _table_claim(claim, params, gl(), params["order"])
    if claim in ("K2-remark", "K4-remark", "Kp-remark"):
        m = params.setdefault("m", 2)
        p = prime_power(q)[0]
        ell, r = {"K2-remark": (2, 1), "K4-remark": (2, 2), "Kp-remark": (p, 1)}[claim]
        if not exists_order(m, q, ell, r):
            return _skip(claim, params, f"no element of order {ell**r} in GL_{m}")
        if m == 2:
            return _table_claim(claim, params, gl(), ell**r)
        notes = ["characteristic-order values are integers by the class criterion"] if ell == p else []
        return _result(claim, params, k_ellr_glm(m, q, ell, r), predict(claim, params), notes)
    if claim == "Thm5":
        t = sl2_table(q, generator_rank)
        return _table_claim(claim, params, t, None, t.notes)
    if claim == "Thm6":
        t = sl2_table(q, generator_rank)
        n = params["ell"] ** params["r"]
        if not t.classes_of_order(n):
            return _skip(claim, params, f"no element of order {n} in SL_2")
        notes = list(t.notes) if n % 2 == 0 or q % n == 0 else []
        return _table_claim(claim, params, t, n, notes)
    if claim == "Lemma3.1":
        return _verify_lemma(params)
    raise ValueError(f"unknown claim {claim!r}")


def _verify_lemma(params: dict) -> VerificationResult:
    """All admissible index tuples for one (q, ell, r); fails if any tuple does."""
    q = params["q"]
    ell, r = _ellr(params)
    if "i" in params:
        tuples = [tuple(params["i"])]
    else:
        tuples = list(lemma31_tuples(ell, r))
    bad = []
    first = None
    for i in tuples:
        chk = lemma31_details(q, ell, r, i)
        first = first or chk
        if not chk.ok:
            bad.append(chk)
    predicted = predict("Lemma3.1", params)
    notes = [f"{len(tuples)} index tuples checked"]
    if not bad:
        return VerificationResult("Lemma3.1", params, first.field, predicted, "pass", notes)
    b = bad[0]
    notes.append(f"{len(bad)} tuples fail; first i={b.i}: product {b.value}, "
                 f"{b.conjugates} conjugates (expected {b.expected_conjugates})")
    k = mult_order(q, ell**r)
    if r >= 2 and k % ell == 0:
        notes.append(f"ord_{ell**r}(q) = {k} is divisible by {ell}, so the top-level period vanishes")
    return VerificationResult("Lemma3.1", params, b.field, predicted, "fail", notes)


# -- sweeps -----------------------------------------------------------------------

def _odd_prime_powers(limit: int) -> list[tuple[int, int]]:
    out = []
    for n in range(3, limit + 1):
        f = factorize(n)
        if len(f) == 1 and f[0][0] != 2:
            out.append(f[0])
    return out


def _prime_powers(limit: int) -> list[tuple[int, int]]:
    return [factorize(n)[0] for n in range(2, limit + 1) if len(factorize(n)) == 1]


def sweep_params(claim: str, q_max: int = 13, ellr_max: int = 27, m_max: int = 3,
                 lemma_q_max: int | None = None) -> list[dict]:
    """The deterministic parameter grid for one claim."""
    qs = prime_powers_upto(q_max)
    odd_qs = [q for q in qs if q % 2]
    out: list[dict] = []
    if claim == "Thm1":
        out = [{"m": 2, "q": q} for q in qs]
    elif claim in ("Thm2", "Thm2-tau"):
        for m in range(2, m_max + 1):
            for q in qs:
                for ell, r in _odd_prime_powers(ellr_max):
                    if ell != prime_power(q)[0] and exists_order(m, q, ell, r):
                        out.append({"m": m, "q": q, "ell": ell, "r": r})
    elif claim in ("Thm3", "Thm5"):
        out = [{"q": q} for q in qs]
    elif claim == "Thm4":
        for q in qs:
            for ell, r in _odd_prime_powers(ellr_max):
                if exists_order(2, q, ell, r):
                    out.append({"q": q, "ell": ell, "r": r})
    elif claim == "Thm4-ell2":
        for q in odd_qs:
            r = 1
            while 2**r <= ellr_max:
                if q % 2**r in (1 % 2**r, 2**r - 1):
                    out.append({"q": q, "ell": 2, "r": r})
                r += 1
    elif claim == "2r-remark":
        for q in odd_qs:
            r = 3
            while 2**r <= ellr_max:
                if q % 2**r in (2 ** (r - 1) - 1, 2 ** (r - 1) + 1):
                    out.append({"q": q, "r": r})
                r += 1
    elif claim == "K8-table":
        out = [{"q": q} for q in odd_qs]
    elif claim == "small-d":
        for q in qs:
            for d in (3, 4, 5, 6):
                if q % d == d - 1:
                    out.append({"q": q, "d": d})
    elif claim == "L1":
        for q in qs:
            p = prime_power(q)[0]
            for d in divisors(q - 1):
                out.append({"q": q, "d": d, "order": d})
                out.append({"q": q, "d": d, "order": p * d})
    elif claim == "L2":
        for q in qs:
            for d in divisors(q * q - 1):
                if (q - 1) % d:
                    out.append({"q": q, "d": d})
    elif claim in ("K2-remark", "K4-remark", "Kp-remark"):
        out = [{"m": m, "q": q} for m in range(2, m_max + 1) for q in qs]
    elif claim == "Thm6":
        for q in qs:
            classes_orders = {c.order for c in sl2_table(q).classes}
            for ell, r in _prime_powers(ellr_max):
                if ell**r in classes_orders:
                    out.append({"q": q, "ell": ell, "r": r})
    elif claim == "Lemma3.1":
        lq = prime_powers_upto(lemma_q_max or q_max)
        for ell, r in _odd_prime_powers(ellr_max):
            for q in lq:
                if gcd(q, ell) == 1:
                    out.append({"q": q, "ell": ell, "r": r})
    else:
        raise ValueError(f"unknown claim {claim!r}")
    return out


def sweep(claims: Iterable[str] | None = None, q_max: int = 13, ellr_max: int = 27, m_max: int = 3,
          lemma_q_max: int | None = None, generator_rank: int = 0) -> list[VerificationResult]:
    claims = CLAIMS if claims is None else tuple(claims)
    out = []
    for claim in claims:
        for params in sweep_params(claim, q_max, ellr_max, m_max, lemma_q_max):
            out.append(verify(claim, params, generator_rank))
    return out


def summary(results: list[VerificationResult]) -> dict[str, int]:
    s = {"pass": 0, "fail": 0, "skipped": 0}
    for res in results:
        s[res.status] += 1
    return s


def report_text(results: list[VerificationResult]) -> str:
    lines = [r.to_text() for r in results]
    s = summary(results)
    lines.append(f"{len(results)} checks: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"


def report_json(results: list[VerificationResult]) -> str:
    return json.dumps({"results": [r.to_dict() for r in results], "summary": summary(results)},
                      sort_keys=True, indent=1)
