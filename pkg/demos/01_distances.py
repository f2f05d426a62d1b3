"""Distances between words of different lengths.

Hamming distance only compares words of equal length.  Two ways to extend
it: T pays one per letter of length difference, d2 pays one per two
letters.  Both agree with Hamming on equal lengths.
"""

from hamming_compat import D2, HAMMING, T, Alphabet, get_metric, parse_word, verify_metric_axioms

A = Alphabet("01")
w = lambda s: parse_word(s, A)  # noqa: E731

pairs = [("0110", "0100"), ("000", ""), ("0101", "01"), ("1", "0000")]
print(f"{'u':>6} {'v':>6} {'H':>3} {'T':>3} {'d2':>3}")
for a, b in pairs:
    u, v = w(a), w(b)
    h = HAMMING(u, v) if len(u) == len(v) else "-"
    print(f"{a or 'ε':>6} {b or 'ε':>6} {h!s:>3} {T(u, v):>3} {D2(u, v):>3}")

# d2 is a metric; charging one per three letters is not
for name in ("d2", "dn:3"):
    report = verify_metric_axioms(get_metric(name), A, 9, fail_fast=True)
    print(f"\n{name}: {report.verdict}", end="")
    if not report.passed:
        u, v, x = (A.render(t) or "ε" for t in report.witness)
        print(f"  d({u}, {v}) = {report.values[0]} > d({u}, {x}) + d({x}, {v}) = "
              f"{report.values[1]} + {report.values[2]}", end="")
print()
