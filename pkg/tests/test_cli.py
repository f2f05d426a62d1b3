import json
import subprocess
import sys

import pytest

from hamming_compat.cli import main
from hamming_compat.registry import list_metrics


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dist_d2(capsys):
    code, out, _ = run(capsys, "dist", "--metric", "d2", "--alphabet", "01", "000", "")
    assert code == 0 and out.strip() == "2"


def test_dist_empty_flag(capsys):
    code, out, _ = run(capsys, "dist", "000", "--empty")
    assert code == 0 and out.strip() == "2"


def test_verify_dn3_fails_with_triangle(capsys):
    code, out, _ = run(capsys, "verify", "--metric", "dn:3", "--alphabet", "01", "--max-len", "9", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"] == "fail" and doc["kind"] == "triangle"
    # shortlex-first witness; values reproduce the violation
    assert doc["witness"] == ["00", "110", ""]
    assert doc["values"][0] > doc["values"][1] + doc["values"][2]
    assert doc["max_len"] == 9


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-len", "3")
    assert code == 0 and out.startswith("pass")


def test_sphere_both(capsys):
    code, out, _ = run(capsys, "sphere", "--metric", "d2", "--alphabet", "01", "--center", "00",
                       "--radius", "1", "--mode", "both")
    assert code == 0
    assert "total 10" in out and "match true" in out
    code, out, _ = run(capsys, "sphere", "--center", "00", "--radius", "1", "--json")
    doc = json.loads(out)
    assert doc["total"] == "10" and doc["match"] is True


def test_sphere_empty_center(capsys):
    code, out, _ = run(capsys, "sphere", "--empty", "--radius", "1")
    assert code == 0 and "total 6" in out


def test_sphere_analytic_needs_d2(capsys):
    code, _, err = run(capsys, "sphere", "--metric", "T", "--center", "0", "--radius", "1", "--mode", "analytic")
    assert code == 2 and "--mode" in err


def test_unknown_symbol_is_usage_error(capsys):
    code, out, err = run(capsys, "dist", "012", "0")
    assert code == 2 and "2" in err and out == ""


def test_cap_exceeded_names_cap(capsys):
    code, _, err = run(capsys, "verify", "--max-len", "30")
    assert code == 2 and "10000000" in err.replace(",", "").replace("_", "")


def test_error_json_is_one_document(capsys):
    code, out, _ = run(capsys, "dist", "012", "0", "--json")
    assert code == 2 and "error" in json.loads(out)


def test_unknown_metric(capsys):
    code, _, err = run(capsys, "dist", "0", "1", "--metric", "nope")
    assert code == 2 and "nope" in err


@pytest.mark.parametrize("argv", [
    ["list-metrics", "--json"],
    ["verify", "--metric", "example412", "--json"],
    ["uniformity", "--metric", "example412", "--json"],
    ["minimality", "--metric", "example411", "--json"],
    ["stats", "--metric", "example411", "--n", "3", "--json"],
    ["opposite", "ab", "--alphabet", "abc", "--json"],
    ["characterize", "--metric", "hamming", "--max-len", "3", "--json"],
])
def test_json_output_is_single_and_deterministic(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    json.loads(first)


def test_list_metrics_has_every_name(capsys):
    code, out, _ = run(capsys, "list-metrics", "--json")
    doc = json.loads(out)
    names = {e["name"] for e in doc["metrics"]}
    assert {e["name"] for e in list_metrics()} <= names
    assert {"hamming", "truncated-hamming", "T", "d2", "example411", "example412"} <= names
    for e in doc["metrics"]:
        assert isinstance(e["claimed_metric"], bool) and isinstance(e["claimed_hamming_compatible"], bool)


def test_override_file(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"base": "d2", "overrides": [["000", "", 1]]}))
    code, out, _ = run(capsys, "dist", "--metric", str(path), "000", "")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "verify", "--metric", str(path))
    assert code == 1 and "triangle" in out


def test_opposite_and_lemma(capsys):
    code, out, _ = run(capsys, "opposite", "010")
    assert out.split() == ["101"]
    code, out, _ = run(capsys, "opposite", "abc", "--alphabet", "abc", "--w", "a", "--json")
    doc = json.loads(out)
    assert doc["opposite"] == "baa" and doc["h_u"] + doc["h_v"] == doc["length_w"]


def test_uniformity_exit_codes(capsys):
    assert run(capsys, "uniformity", "--metric", "d2", "--max-len", "3")[0] == 0
    code, out, _ = run(capsys, "uniformity", "--metric", "example412", "--max-len", "3")
    assert code == 1 and "uniform: fail" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hamming_compat.cli", "dist", "0101", "01"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
