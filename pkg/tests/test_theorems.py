import json

import pytest

from charfields.galois import cyclotomic_field, fixed_field, quad, rational_field
from charfields.theorems import CLAIMS, predict, report_json, summary, sweep, sweep_params, verify


def test_predict_examples():
    assert predict("Thm4", {"q": 7, "ell": 3, "r": 1}) == cyclotomic_field(3)
    assert predict("K8-table", {"q": 13}) == fixed_field(4, [1])
    assert predict("Thm6", {"q": 5, "ell": 5, "r": 1}) == quad(5)
    assert predict("Thm6", {"q": 9, "ell": 3, "r": 1}) == rational_field()
    assert predict("Thm5", {"q": 4}) == quad(5)
    with pytest.raises(ValueError):
        predict("Thm4", {"q": 7, "ell": 5, "r": 1})


def test_verify_examples():
    r = verify("L2", {"q": 3, "d": 8})
    assert r.passed and r.computed == quad(-2)
    r = verify("Thm5", {"q": 4})
    assert r.passed and r.computed == quad(5)
    r = verify("Thm4", {"q": 3, "ell": 3, "r": 1})
    assert r.passed and r.computed == rational_field()
    assert verify("K4-remark", {"m": 2, "q": 4}).status == "skipped"


def test_every_claim_in_default_sweep():
    for c in CLAIMS:
        assert sweep_params(c), c


def test_sweep_is_deterministic_and_only_lemma_fails():
    a = sweep(["Thm4", "Thm6", "Lemma3.1"], q_max=9, ellr_max=9)
    b = sweep(["Thm4", "Thm6", "Lemma3.1"], q_max=9, ellr_max=9)
    assert report_json(a) == report_json(b)
    fails = [(r.claim, r.params["q"], r.params["ell"] ** r.params["r"]) for r in a if r.status == "fail"]
    assert fails == [("Lemma3.1", 4, 9), ("Lemma3.1", 7, 9)]
    assert summary(a)["fail"] == 2


def test_failure_notes_name_offending_values():
    from charfields.theorems import _result
    from charfields.tables import gl2_table

    t = gl2_table(5)
    res = _result("demo", {}, t.field_generated(), rational_field(), table=t)
    assert res.status == "fail"
    assert any(n.startswith("outside prediction") for n in res.notes)


def test_result_serialization():
    r = verify("Thm4", {"q": 13, "ell": 7, "r": 1})
    d = json.loads(json.dumps(r.to_dict(), sort_keys=True))
    assert d["status"] == "pass" and d["computed"]["conductor"] == 7


def test_lemma_single_tuple():
    r = verify("Lemma3.1", {"q": 4, "ell": 5, "r": 1, "i": [1]})
    assert r.passed and r.computed == quad(5)
