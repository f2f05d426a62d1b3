import json

import pytest

from hamming_compat import (
    D2,
    HAMMING,
    T,
    Alphabet,
    CallableMetric,
    CapExceeded,
    InvalidParameter,
    find_dn_violation,
    get_metric,
    hamming,
    parse_word,
    verify_hamming_characterization,
    verify_hamming_compatible,
    verify_metric_axioms,
)
from hamming_compat.metrics import d_n

from . import oracles

BIN = Alphabet("01")
TER = Alphabet("abc")


def _render(report, alphabet=BIN):
    return [alphabet.render(w) for w in report.witness]


@pytest.mark.parametrize("alphabet", [BIN, TER])
@pytest.mark.parametrize("max_len", range(6))
def test_d2_is_metric_at_small_bounds(alphabet, max_len):
    report = verify_metric_axioms(D2, alphabet, max_len)
    assert report.passed, report


def test_T_and_d2_pass():
    assert verify_metric_axioms(T, BIN, 4).passed
    assert verify_metric_axioms(D2, BIN, 4).passed


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dn_fails_at_3n(n):
    report = verify_metric_axioms(get_metric(f"dn:{n}"), BIN, 3 * n, fail_fast=True)
    assert report.verdict == "fail"
    assert report.kind == "triangle"
    u, v, w = find_dn_violation(n, BIN)
    assert max(len(u), len(v), len(w)) <= 3 * n
    assert d_n(u, v, n) > d_n(u, w, n) + d_n(w, v, n)


def test_dn3_full_scan_witness_is_shortlex_minimal():
    report = verify_metric_axioms(get_metric("dn:3"), BIN, 9)
    assert (report.kind, _render(report), report.values) == ("triangle", ["00", "110", ""], (3, 1, 1))
    # brute-force oracle over bound 3 finds the same first violation
    words = oracles.all_strings("01", 3)
    first = oracles.triangle_violations(lambda a, b: oracles.dn(a, b, 3), words)[0]
    assert list(first) == _render(report)


def test_witness_reproduces_violation():
    metric = get_metric("dn:4")
    report = verify_metric_axioms(metric, BIN, 5)
    u, v, w = report.witness
    assert report.values == (metric(u, v), metric(u, w), metric(w, v))
    assert metric(u, v) > metric(u, w) + metric(w, v)


def test_lazy_path_matches_dense():
    metric = get_metric("dn:3")
    dense = verify_metric_axioms(metric, BIN, 4)
    lazy = verify_metric_axioms(metric, BIN, 4, cap=40)
    assert (lazy.kind, lazy.witness, lazy.values) == (dense.kind, dense.witness, dense.values)
    assert verify_metric_axioms(D2, BIN, 3, cap=20).passed


def test_failures_in_each_axiom_kind():
    P = lambda s: parse_word(s, BIN)  # noqa: E731
    reflex = CallableMetric("r", lambda u, v: 1 if u == v == P("1") else oracles.d2(BIN.render(u), BIN.render(v)))
    r = verify_metric_axioms(reflex, BIN, 2)
    assert (r.kind, _render(r)) == ("reflexivity", ["1"])

    ident = CallableMetric("i", lambda u, v: 0 if {u, v} == {P("0"), P("1")} else D2(u, v))
    r = verify_metric_axioms(ident, BIN, 2)
    assert (r.kind, _render(r)) == ("identity", ["0", "1"])

    asym = CallableMetric("s", lambda u, v: D2(u, v) + (1 if (u, v) == (P("0"), P("")) else 0))
    r = verify_metric_axioms(asym, BIN, 2)
    assert (r.kind, _render(r), r.values) == ("symmetry", ["", "0"], (1, 2))


def test_full_scan_lists_every_failing_kind():
    trunc = get_metric("truncated-hamming")
    r = verify_metric_axioms(trunc, BIN, 2)
    assert r.kind == "identity"
    assert r.details["failed_kinds"] == ["identity", "triangle"]
    r = verify_metric_axioms(trunc, BIN, 2, fail_fast=True)
    assert "failed_kinds" not in r.details


def test_hamming_is_metric_per_length():
    r = verify_metric_axioms(HAMMING, TER, 4)
    assert r.passed
    # pairs are counted within each length only
    assert r.checked_pairs == sum(9**n for n in range(5))


def test_report_json_fields():
    r = verify_metric_axioms(get_metric("dn:3"), BIN, 3)
    doc = r.to_dict(BIN)
    assert list(doc) == ["verdict", "kind", "witness", "values", "checked_pairs", "checked_triples", "max_len"]
    assert json.loads(json.dumps(doc)) == doc
    assert doc["witness"] == ["00", "110", ""]


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        verify_metric_axioms(D2, BIN, 12, cap=1000)


# -- compatibility ---------------------------------------------------------

@pytest.mark.parametrize("name,max_len", [("d2", 5), ("truncated-hamming", 3), ("dn:3", 4), ("T", 4)])
def test_hamming_compatible(name, max_len):
    assert verify_hamming_compatible(get_metric(name), BIN, max_len).passed


def test_incompatible_metric_reports_pair():
    doubled = CallableMetric("2H", lambda u, v: 2 * oracles.d2(BIN.render(u), BIN.render(v)))
    r = verify_hamming_compatible(doubled, BIN, 3)
    assert (r.kind, _render(r), r.values) == ("compatibility", ["0", "1"], (2, 1))


# -- characterization --------------------------------------------------------

def _equal_length(f):
    def dist(u, v):
        if len(u) != len(v):
            return 7
        return f(u, v)
    return dist


@pytest.mark.parametrize("max_len", [1, 2, 3, 4, 5])
def test_characterization_accepts_hamming(max_len):
    assert verify_hamming_characterization(HAMMING, BIN, max_len).passed
    extended = CallableMetric("H+", _equal_length(hamming))
    assert verify_hamming_characterization(extended, BIN, max_len).passed
    assert verify_hamming_characterization(HAMMING, TER, min(max_len, 3)).passed


def test_characterization_rejects_doubled_hamming():
    doubled = CallableMetric("2H", _equal_length(lambda u, v: 2 * hamming(u, v)))
    r = verify_hamming_characterization(doubled, BIN, 3)
    assert r.kind == "bound"
    assert r.details["condition"] == 1
    assert _render(r) == ["0", "1"] and r.values == (2, 1)


def test_characterization_rejects_capped_hamming():
    capped = CallableMetric("min(H,1)", _equal_length(lambda u, v: min(hamming(u, v), 1)))
    r = verify_hamming_characterization(capped, BIN, 2)
    assert r.kind == "additivity"
    assert _render(r) == ["00", "11"]
    assert r.details["split"] == 1
    assert r.values == (1, 1, 1)


def test_characterization_checks_per_length_metric_first():
    broken = CallableMetric("b", _equal_length(lambda u, v: 0))
    r = verify_hamming_characterization(broken, BIN, 2)
    assert r.kind == "identity"


# -- d_n counterexample ----------------------------------------------------

def test_find_dn_violation_n3():
    u, v, w = find_dn_violation(3, BIN)
    assert [BIN.render(x) for x in (u, v, w)] == ["000000", "000111000", "000"]
    assert (d_n(u, v, 3), d_n(u, w, 3), d_n(w, v, 3)) == (4, 1, 2)


def test_find_dn_violation_n4():
    u, v, w = find_dn_violation(4, BIN)
    assert [BIN.render(x) for x in (u, v, w)] == ["0" * 8, "0" * 4 + "1" * 4 + "0" * 4, "0" * 4]
    assert (d_n(u, v, 4), d_n(u, w, 4), d_n(w, v, 4)) == (5, 1, 2)


def test_find_dn_violation_rejects_metrics():
    with pytest.raises(InvalidParameter):
        find_dn_violation(2, BIN)
    with pytest.raises(InvalidParameter):
        find_dn_violation(3, Alphabet("a"))
