import io
import json
import subprocess
import sys

import pytest

from charfields.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_field_json():
    code, out = call("field", "--group", "gl2", "--q", "7", "--order", "3")
    assert code == 0
    d = json.loads(out)
    assert d["conductor"] == 3 and d["degree"] == 2 and "Q(zeta_3)" in d["names"]
    assert d["query"]["p"] == 7 and d["query"]["n"] == 1


def test_p_n_form_equals_q_form():
    assert call("field", "--group", "sl2", "--p", "3", "--n", "2")[1] == call("field", "--group", "sl2", "--q", "9")[1]


def test_table_counts():
    code, out = call("table", "--group", "sl2", "--q", "4")
    assert code == 0 and "5 classes, 5 characters" in out


def test_table_json_roundtrip_and_determinism(tmp_path):
    from charfields.tables import field_from_dump, sl2_table

    path = tmp_path / "t.json"
    assert call("table", "--group", "sl2", "--q", "7", "--format", "json", "--output", str(path))[0] == 0
    d = json.loads(path.read_text())
    assert field_from_dump(d, 7) == sl2_table(7).field_generated(7)
    assert call("table", "--group", "gl2", "--q", "3", "--format", "json") == call(
        "table", "--group", "gl2", "--q", "3", "--format", "json")


def test_verify_exit_codes():
    code, out = call("verify", "--claim", "Thm4", "--q", "5", "--ell", "3", "--r", "1")
    assert code == 0 and out.startswith("PASS") and "computed Q " in out
    code, out = call("verify", "--claim", "Lemma3.1", "--q", "4", "--ell", "3", "--r", "2")
    assert code == 1 and out.startswith("FAIL")


def test_usage_errors():
    assert call("field", "--group", "gl2", "--q", "6")[0] == 2
    assert call("field", "--group", "gl2", "--q", "5", "--order", "7")[0] == 2
    assert call("verify", "--claim", "nope", "--q", "5")[0] == 2
    assert call("verify", "--claim", "Thm4", "--q", "5")[0] == 2
    assert call("frobnicate")[0] == 2


def test_bound_exceeded(monkeypatch):
    from charfields.limits import bounds

    monkeypatch.setattr(bounds, "max_level", 10)
    assert call("field", "--group", "glm", "--q", "7", "--m", "2")[0] == 3


def test_glm_field():
    code, out = call("field", "--group", "glm", "--q", "2", "--m", "3", "--order", "7", "--format", "text")
    assert code == 0 and "Q(sqrt(-7))" in out


def test_sweep_subset():
    code, out = call("sweep", "--claims", "Thm5,Thm6", "--q-max", "5")
    assert code == 0 and "0 fail" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "charfields", "selftest", "--q-max", "4"],
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stdout + res.stderr
    assert res.stdout.count("PASS") == 6
