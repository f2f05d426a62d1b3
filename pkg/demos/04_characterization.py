"""Hamming distance is pinned down by two conditions on equal-length words.

Distance at most the length, and additive over concatenation.  Scaling by
two breaks the first; capping at one breaks the second.
"""

from hamming_compat import Alphabet, CallableMetric, hamming, get_metric, verify_hamming_characterization

A = Alphabet("01")


def equal_length_only(f):
    return lambda u, v: f(u, v) if len(u) == len(v) else len(u) + len(v)


candidates = [
    get_metric("hamming"),
    CallableMetric("2H", equal_length_only(lambda u, v: 2 * hamming(u, v))),
    CallableMetric("min(H, 1)", equal_length_only(lambda u, v: min(hamming(u, v), 1))),
]
for metric in candidates:
    report = verify_hamming_characterization(metric, A, 4)
    line = f"{metric.name:>10}: {report.verdict}"
    if not report.passed:
        line += f"  ({report.kind} at {[A.render(w) for w in report.witness]}, values {report.values})"
    print(line)
