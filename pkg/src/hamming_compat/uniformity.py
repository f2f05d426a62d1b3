"""Hamming opposites, uniformity predicates, and minimality against d2.

Two words of length n are *Hamming opposites* when they differ in every
position.  A distance ``delta`` is weakly uniform when opposites are
equidistant from the empty word, and uniform when opposites have equal
excess ``delta - truncated_hamming`` against every word.  Uniform Hamming
compatible metrics are bounded below by d2; the checks here test that on all
words up to a length bound.

The empty word is treated as its own unique opposite.  Over a one-letter
alphabet no word of positive length has an opposite; the predicates then
pass vacuously and say so in the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .axioms import AxiomReport, Language, _first_true
from .errors import InvalidParameter
from .metrics import D2, DistanceFunction, _trunc_hamming_rows, truncated_hamming
from .words import EMPTY, Alphabet, Word, _check_cap, words_array


def hamming_opposites(u: Word, alphabet: Alphabet, cap: int | None = None) -> list[Word]:
    """All words differing from ``u`` in every position, in shortlex order."""
    N = alphabet.size
    if len(u) == 0:
        return [EMPTY]
    if N == 1:
        raise InvalidParameter("a one-letter alphabet has no Hamming opposites for non-empty words")
    _check_cap((N - 1) ** len(u), cap, "opposites")
    choices = [[s for s in range(N) if s != x] for x in u.letters]
    return [Word(t) for t in product(*choices)]


def lemma48_opposite(u: Word, w: Word, alphabet: Alphabet) -> Word:
    """An opposite ``v`` of ``u`` whose prefix agrees with ``w`` wherever ``u`` does not.

    Then ``truncated_hamming(u, w) + truncated_hamming(v, w) == len(w)``.
    Free positions take the smallest symbol different from ``u`` there.
    """
    if len(u) < len(w):
        raise InvalidParameter("need len(u) >= len(w)")
    if alphabet.size < 2:
        raise InvalidParameter("need at least two symbols")
    out = []
    for i, x in enumerate(u.letters):
        if i < len(w) and w.letters[i] != x:
            out.append(w.letters[i])
        else:
            out.append(1 if x == 0 else 0)
    return Word(tuple(out))


def lemma48_opposites(u: Word, w: Word, alphabet: Alphabet, cap: int | None = None) -> list[Word]:
    """Every opposite of ``u`` meeting the equality above; there are ``(N-1)^(n-h)``."""
    if len(u) < len(w):
        raise InvalidParameter("need len(u) >= len(w)")
    h = truncated_hamming(u, w)
    return [v for v in hamming_opposites(u, alphabet, cap)
            if h + truncated_hamming(v, w) == len(w)]


def _opposite_mask(block: np.ndarray, i: int) -> np.ndarray:
    if block.shape[1] == 0:
        return np.ones(block.shape[0], dtype=bool)
    return (block != block[i]).all(axis=1)


@dataclass
class UniformityReport:
    weakly_uniform: str
    uniform: str | None
    bound: int
    witness_weak: tuple | None = None
    witness_uniform: tuple | None = None
    vacuous: bool = False

    def to_dict(self, alphabet: Alphabet) -> dict:
        r = alphabet.render
        ww = wu = None
        if self.witness_weak:
            u, v, du, dv = self.witness_weak
            ww = {"u": r(u), "v": r(v), "values": [du, dv]}
        if self.witness_uniform:
            u, v, w, gu, gv = self.witness_uniform
            wu = {"u": r(u), "v": r(v), "w": r(w), "gamma": [gu, gv]}
        return {
            "weakly_uniform": self.weakly_uniform,
            "uniform": self.uniform,
            "bound": self.bound,
            "witness_weak": ww,
            "witness_uniform": wu,
            "vacuous": self.vacuous,
        }


def is_weakly_uniform(delta: DistanceFunction, alphabet: Alphabet, max_len: int,
                      cap: int | None = None) -> UniformityReport:
    """``delta(u, eps) == delta(v, eps)`` for all opposites up to ``max_len``.

    The witness is the shortlex-least pair ``(u, v)`` with its two distances.
    """
    lang = Language(alphabet, max_len, cap)
    vacuous = alphabet.size == 1
    eps_block = lang.blocks[0]
    for n in range(max_len + 1):
        if vacuous and n > 0:
            break
        block = lang.blocks[n]
        words = lang.words[lang.length_slice(n)]
        to_eps = np.array([delta.distances_to(u, eps_block)[0] for u in words])
        for i, u in enumerate(words):
            j = _first_true(_opposite_mask(block, i) & (to_eps != to_eps[i]))
            if j is not None:
                return UniformityReport("fail", None, max_len,
                                        witness_weak=(u, words[j], int(to_eps[i]), int(to_eps[j])))
    return UniformityReport("pass", None, max_len, vacuous=vacuous)


def is_uniform(delta: DistanceFunction, alphabet: Alphabet, max_len: int,
               cap: int | None = None) -> UniformityReport:
    """Equal excess for opposites ``u, v`` against every ``w`` up to ``max_len``.

    Witnesses are ordered by ``w`` first, then ``(u, v)``, so ``w = eps``
    (weak uniformity) is examined before anything else.  The quantifier over
    ``w`` is cut at ``max_len``; the report records the bound.
    """
    weak = is_weakly_uniform(delta, alphabet, max_len, cap)
    lang = Language(alphabet, max_len, cap)
    vacuous = alphabet.size == 1
    best = None  # (w_index, n, i, j)
    for n in range(max_len + 1):
        if vacuous and n > 0:
            break
        block = lang.blocks[n]
        words = lang.words[lang.length_slice(n)]
        excess = np.stack([
            np.concatenate([delta.distances_to(u, b) - _trunc_hamming_rows(u, b) for b in lang.blocks])
            for u in words
        ])
        for i in range(len(words)):
            opp = np.flatnonzero(_opposite_mask(block, i))
            diff = excess[opp] != excess[i]           # [opposite, w]
            hit = diff.any(axis=0)
            k = _first_true(hit)
            if k is None:
                continue
            j = int(opp[_first_true(diff[:, k])])
            cand = (k, n, i, j)
            if best is None or cand < best:
                best = cand
    if best is None:
        return UniformityReport(weak.weakly_uniform, "pass", max_len,
                                witness_weak=weak.witness_weak, vacuous=vacuous)
    k, n, i, j = best
    words = lang.words[lang.length_slice(n)]
    u, v, w = words[i], words[j], lang.words[k]
    gu = delta(u, w) - truncated_hamming(u, w)
    gv = delta(v, w) - truncated_hamming(v, w)
    return UniformityReport(weak.weakly_uniform, "fail", max_len,
                            witness_weak=weak.witness_weak,
                            witness_uniform=(u, v, w, gu, gv), vacuous=vacuous)


def check_empty_word_bound(delta: DistanceFunction, alphabet: Alphabet, max_len: int,
                           cap: int | None = None) -> AxiomReport:
    """``2 * delta(u, eps) >= len(u)`` for every ``u`` up to ``max_len``.

    Weak uniformity guarantees this for metrics; it is checked first and
    recorded in ``details["weakly_uniform"]``.  ``details["sharp_lengths"]``
    lists the lengths where the bound is attained.
    """
    weak = is_weakly_uniform(delta, alphabet, max_len, cap)
    lang = Language(alphabet, max_len, cap)
    details = {"weakly_uniform": weak.weakly_uniform == "pass"}
    if weak.witness_weak:
        details["weak_witness"] = list(weak.witness_weak)
    sharp = []
    witness = None
    for n in range(max_len + 1):
        words = lang.words[lang.length_slice(n)]
        to_eps = np.array([delta.distances_to(u, lang.blocks[0])[0] for u in words])
        if witness is None:
            i = _first_true(2 * to_eps < n)
            if i is not None:
                witness = (words[i], int(to_eps[i]), n)
        if 2 * to_eps.min() == n:
            sharp.append(n)
    details["sharp_lengths"] = sharp
    pairs = len(lang)
    if witness is None:
        return AxiomReport("pass", pairs, 0, max_len, details=details)
    u, d, n = witness
    return AxiomReport("fail", pairs, 0, max_len, kind="bound", witness=(u, EMPTY),
                       values=(d, n), details=details)


@dataclass
class MinimalityReport:
    verdict: str
    bound: int
    violations: list[tuple[Word, Word, int, int]] = field(default_factory=list)
    fraction_satisfying: dict[tuple[int, int], Fraction] = field(default_factory=dict)
    equal_everywhere: bool = False
    uniform: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self, alphabet: Alphabet) -> dict:
        r = alphabet.render
        return {
            "verdict": self.verdict,
            "bound": self.bound,
            "violations": [[r(u), r(w), d, e] for u, w, d, e in self.violations],
            "fraction_satisfying": {f"{n},{m}": str(f) for (n, m), f in sorted(self.fraction_satisfying.items())},
            "equal_everywhere": self.equal_everywhere,
            "uniform": self.uniform,
        }


def check_minimality(delta: DistanceFunction, alphabet: Alphabet, max_len: int,
                     include_uniformity: bool = False, cap: int | None = None) -> MinimalityReport:
    """Look for pairs with ``delta(u, w) < d2(u, w)``.

    Violations are listed for ``len(u) >= len(w)`` in shortlex order of
    ``(u, w)``.  ``fraction_satisfying[(n, m)]`` is the share of all ordered
    pairs with those lengths where ``delta >= d2``.
    """
    lang = Language(alphabet, max_len, cap)
    violations = []
    good = {}
    equal = True
    for n in range(max_len + 1):
        for u in lang.words[lang.length_slice(n)]:
            for m, block in enumerate(lang.blocks):
                got = delta.distances_to(u, block)
                ref = D2.distances_to(u, block)
                ok = got >= ref
                good[(n, m)] = good.get((n, m), 0) + int(ok.sum())
                equal = equal and bool((got == ref).all())
                if m <= n:
                    for j in np.flatnonzero(~ok):
                        w = lang.words[lang.offsets[m] + j]
                        violations.append((u, w, int(got[j]), int(ref[j])))
    N = alphabet.size
    fractions = {(n, m): Fraction(c, N ** (n + m)) for (n, m), c in good.items()}
    uniform = None
    if include_uniformity:
        uniform = is_uniform(delta, alphabet, max_len, cap).uniform
    return MinimalityReport("fail" if violations else "pass", max_len, violations,
                            fractions, equal, uniform)


@dataclass
class OppositeStats:
    violating_u: int
    opposite_rescues: int
    lemma_window_size: int
    probability_floor: Fraction
    per_word: list[dict] = field(default_factory=list)

    def to_dict(self, alphabet: Alphabet) -> dict:
        r = alphabet.render
        rows = []
        for e in self.per_word:
            rows.append({
                "u": r(e["u"]), "opposite": r(e["opposite"]), "h": e["h"],
                "rescued": e["rescued"], "window_size": str(e["window_size"]),
                "equality_opposites": str(e["equality_opposites"]),
                "probability_floor": str(e["probability_floor"]),
            })
        return {
            "violating_u": str(self.violating_u),
            "opposite_rescues": str(self.opposite_rescues),
            "lemma_window_size": str(self.lemma_window_size),
            "probability_floor": str(self.probability_floor),
            "per_word": rows,
        }


def opposite_satisfaction_stats(delta: DistanceFunction, alphabet: Alphabet, n: int, w: Word,
                                cap: int | None = None) -> OppositeStats:
    """How the opposites of words violating ``delta >= d2`` against ``w`` fare.

    For each ``u`` of length ``n`` with ``delta(u, w) < d2(u, w)``, the
    constructed opposite is tested against the same bound, and the opposites
    meeting the prefix equality are counted by enumeration (expected
    ``(N-1)^(n-h)`` with ``h = truncated_hamming(u, w)``).  Aggregates are
    the worst case over violating words; with no violations they fall back
    to the general floor ``1 / (N-1)^len(w)``.
    """
    if n < 1:
        raise InvalidParameter("n must be positive")
    if n < len(w):
        raise InvalidParameter(f"need n >= len(w), got n={n}, len(w)={len(w)}")
    N = alphabet.size
    if N < 2:
        raise InvalidParameter("need at least two symbols")
    block = words_array(alphabet, n, cap)
    _check_cap((N - 1) ** n, cap, "opposites")
    got = np.array([delta(Word(tuple(int(x) for x in row)), w) for row in block])
    ref = D2.distances_to(w, block)
    per_word = []
    for i in np.flatnonzero(got < ref):
        u = Word(tuple(int(x) for x in block[i]))
        h = truncated_hamming(u, w)
        v = lemma48_opposite(u, w, alphabet)
        per_word.append({
            "u": u, "opposite": v, "h": h,
            "rescued": delta(v, w) >= D2(v, w),
            "window_size": (N - 1) ** (n - h),
            "equality_opposites": len(lemma48_opposites(u, w, alphabet, cap)),
            "probability_floor": Fraction(1, (N - 1) ** h),
        })
    if per_word:
        h_max = max(e["h"] for e in per_word)
    else:
        h_max = len(w)
    return OppositeStats(
        violating_u=len(per_word),
        opposite_rescues=sum(e["rescued"] for e in per_word),
        lemma_window_size=(N - 1) ** (n - h_max),
        probability_floor=Fraction(1, (N - 1) ** h_max),
        per_word=per_word,
    )
