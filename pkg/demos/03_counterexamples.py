"""Two hand-built metrics that show why uniformity matters.

example411 moves ε close to 000.  It stays a Hamming compatible metric but
drops below d2, and it treats the opposites 0 and 1 differently.

example412 treats every opposite pair the same way from ε, yet the excess
over truncated Hamming differs for 00 and 11 against the word 0.  Our
exhaustive check also finds that it breaks the triangle inequality through
words starting with 11.
"""

from hamming_compat import (
    Alphabet,
    check_minimality,
    get_metric,
    is_uniform,
    opposite_satisfaction_stats,
    parse_word,
    verify_hamming_compatible,
    verify_metric_axioms,
)

A = Alphabet("01")
show = lambda x: A.render(x) or "ε"  # noqa: E731

for name in ("example411", "example412"):
    delta = get_metric(name)
    metric = verify_metric_axioms(delta, A, 4)
    compat = verify_hamming_compatible(delta, A, 4)
    uni = is_uniform(delta, A, 4)
    mini = check_minimality(delta, A, 4)
    print(f"{name}: metric {metric.verdict}, compatible {compat.verdict}, "
          f"weakly uniform {uni.weakly_uniform}, uniform {uni.uniform}, above d2 {mini.verdict}")
    if not metric.passed:
        print("  triangle witness:", tuple(show(x) for x in metric.witness), metric.values)
    if uni.witness_weak:
        u, v, du, dv = uni.witness_weak
        print(f"  from ε: d({show(u)}) = {du}, d({show(v)}) = {dv}")
    if uni.witness_uniform:
        u, v, w, gu, gv = uni.witness_uniform
        print(f"  excess against {show(w)}: {show(u)} -> {gu}, {show(v)} -> {gv}")
    for u, w, d, e in mini.violations:
        print(f"  below d2 at ({show(u)}, {show(w)}): {d} < {e}")

# over {0,1} every word has one opposite, and it always makes up the loss
stats = opposite_satisfaction_stats(get_metric("example411"), A, 3, parse_word("", A))
print(f"\nlength 3 against ε: {stats.violating_u} words fall below d2, "
      f"{stats.opposite_rescues} of their opposites do not")
