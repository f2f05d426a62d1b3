import pytest
from hypothesis import given, settings, strategies as st

from hamming_compat import (
    D2,
    T,
    Alphabet,
    CapExceeded,
    NoLengthBound,
    enumerate_sphere,
    get_metric,
    parse_word,
    sphere_count_by_enumeration,
    sphere_size,
    sphere_size_fixed_length,
)
from hamming_compat.spheres import binom
from hamming_compat.words import enumerate_language

from . import oracles

BIN = Alphabet("01")
TER = Alphabet("abc")
P = lambda s: parse_word(s, BIN)  # noqa: E731


def test_fixed_length_examples():
    # values confirmed against oracles.sphere_brute below
    assert sphere_size_fixed_length(P("00"), 4, 1, BIN) == 4
    assert sphere_size_fixed_length(P("00"), 2, 1, BIN) == 2
    assert sphere_size_fixed_length(P("00"), 6, 1, BIN) == 0


def test_fixed_length_examples_by_brute_force():
    brute = oracles.sphere_brute(oracles.d2, "00", 1, "01", 6)
    assert sum(len(v) == 4 for v in brute) == 4
    assert sum(len(v) == 2 for v in brute) == 2
    assert sum(len(v) == 6 for v in brute) == 0


def test_sphere_size_examples():
    s = sphere_size(P("00"), 1, BIN)
    assert s.total == 10
    assert s.by_length == {0: 1, 1: 1, 2: 2, 3: 2, 4: 4}
    assert sphere_size(P(""), 1, BIN).by_length == {1: 2, 2: 4}
    assert sphere_size(P(""), 1, BIN).total == 6
    for w in ["", "0", "0110", "111"]:
        assert sphere_size(P(w), 0, BIN).total == 1


def test_enumerate_sphere_examples():
    got = [BIN.render(v) for v in enumerate_sphere(D2, P("00"), 1, BIN)]
    assert got == ["", "0", "01", "10", "000", "001", "0000", "0001", "0010", "0011"]
    assert got == sorted(oracles.sphere_brute(oracles.d2, "00", 1, "01", 6), key=lambda s: (len(s), s))
    assert [BIN.render(v) for v in enumerate_sphere(T, P("00"), 1, BIN)] == ["0", "01", "10", "000", "001"]
    assert enumerate_sphere(D2, P("0110"), 0, BIN) == [P("0110")]


def test_enumerate_sphere_needs_a_window():
    with pytest.raises(NoLengthBound):
        enumerate_sphere(get_metric("truncated-hamming"), P("0"), 1, BIN)


def test_enumerate_sphere_cap():
    with pytest.raises(CapExceeded):
        enumerate_sphere(D2, P("0"), 12, BIN, cap=1000)


def test_binomial_convention():
    assert binom(3, -1) == 0 and binom(3, 4) == 0 and binom(0, 0) == 1 and binom(5, 2) == 10


@pytest.mark.parametrize("alphabet", [BIN, TER])
def test_analytic_matches_brute_force_strings(alphabet):
    # independent oracle: plain strings, every word up to k + 2r
    for u in enumerate_language(alphabet, 3):
        k = len(u)
        for r in range(3):
            brute = oracles.sphere_brute(oracles.d2, alphabet.render(u), r, alphabet.symbols, k + 2 * r)
            s = sphere_size(u, r, alphabet)
            assert s.total == len(brute)
            for j, c in s.by_length.items():
                assert c == sum(len(v) == j for v in brute)


@pytest.mark.parametrize("alphabet", [BIN, TER])
def test_partition_of_each_length(alphabet):
    for u in enumerate_language(alphabet, 3):
        for j in range(len(u) + 5):
            rmax = max(len(u), j)
            assert sum(sphere_size_fixed_length(u, j, r, alphabet) for r in range(rmax + 1)) == alphabet.size**j


@given(st.text(alphabet="01", max_size=8), st.integers(0, 6), st.integers(0, 30))
def test_empty_outside_window(s, r, j):
    k = len(s)
    if not (k - 2 * r <= j <= k + 2 * r):
        assert sphere_size_fixed_length(P(s), j, r, BIN) == 0


@settings(max_examples=50)
@given(st.text(alphabet="01", max_size=5), st.integers(0, 3))
def test_sphere_invariants(s, r):
    count = sphere_size(P(s), r, BIN)
    assert count.total == sum(count.by_length.values())
    assert all(max(0, len(s) - 2 * r) <= j <= len(s) + 2 * r for j in count.by_length)
    assert count.by_length == sphere_count_by_enumeration(D2, P(s), r, BIN).by_length


def test_large_radius_exact():
    s = sphere_size(parse_word("abc", TER), 40, TER)
    assert s.total == sum(s.by_length.values())
    assert s.total > 2**64


def test_sphere_for_counterexample_metrics():
    for name in ("example411", "example412"):
        metric = get_metric(name)
        for u in enumerate_language(BIN, 2):
            for r in range(3):
                got = [BIN.render(v) for v in enumerate_sphere(metric, u, r, BIN)]
                ref = oracles.ex411 if name == "example411" else oracles.ex412
                hi = max(len(u), 3) + 2 * r + 1
                want = sorted(oracles.sphere_brute(ref, BIN.render(u), r, "01", hi), key=lambda x: (len(x), x))
                assert got == want
