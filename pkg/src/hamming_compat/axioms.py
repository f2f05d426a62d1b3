"""Bounded exhaustive checks of metric axioms and Hamming compatibility.

All checks enumerate every word up to a length bound and report the
shortlex-minimal violation.  Triples ``(u, v, w)`` for the triangle
inequality ``delta(u, v) <= delta(u, w) + delta(w, v)`` are ordered
lexicographically by ``(u, v, w)``.

Distances are tabulated once in a dense ``W x W`` matrix when ``W**2`` fits
the enumeration cap; otherwise rows are recomputed on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import InvalidParameter
from .metrics import HAMMING, DistanceFunction, d_n
from .words import (
    DEFAULT_CAP,
    Alphabet,
    Word,
    _check_cap,
    language_size,
    row_to_word,
    words_array,
)

KINDS = ("reflexivity", "identity", "symmetry", "triangle", "compatibility", "additivity", "bound")


@dataclass
class AxiomReport:
    """Verdict of a bounded audit; ``witness`` is present iff the verdict is ``fail``."""

    verdict: str
    checked_pairs: int
    checked_triples: int
    max_len: int
    kind: str | None = None
    witness: tuple[Word, ...] = ()
    values: tuple[int, ...] = ()
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def __bool__(self):
        return self.passed

    def to_dict(self, alphabet: Alphabet) -> dict:
        out = {
            "verdict": self.verdict,
            "kind": self.kind,
            "witness": [alphabet.render(w) for w in self.witness],
            "values": [int(v) for v in self.values],
            "checked_pairs": str(self.checked_pairs),
            "checked_triples": str(self.checked_triples),
            "max_len": self.max_len,
        }
        if self.details:
            out["details"] = _jsonable(self.details, alphabet)
        return out


def _jsonable(obj, alphabet):
    if isinstance(obj, Word):
        return alphabet.render(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v, alphabet) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v, alphabet) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


class Language:
    """All words of length ``0..max_len`` as length blocks plus a flat shortlex list."""

    def __init__(self, alphabet: Alphabet, max_len: int, cap: int | None = None):
        if max_len < 0:
            raise InvalidParameter("max_len must be non-negative")
        self.alphabet = alphabet
        self.max_len = max_len
        self.cap = DEFAULT_CAP if cap is None else cap
        _check_cap(language_size(alphabet, max_len), self.cap)
        self.blocks = [words_array(alphabet, n, self.cap) for n in range(max_len + 1)]
        self.offsets = np.cumsum([0] + [b.shape[0] for b in self.blocks])
        self.words = [row_to_word(row) for b in self.blocks for row in b]

    def __len__(self):
        return len(self.words)

    def length_slice(self, n: int) -> slice:
        return slice(int(self.offsets[n]), int(self.offsets[n + 1]))

    def row(self, delta: DistanceFunction, u: Word) -> np.ndarray:
        return np.concatenate([delta.distances_to(u, b) for b in self.blocks])

    def matrix(self, delta: DistanceFunction) -> np.ndarray | None:
        """Dense distance table, or ``None`` when ``W**2`` exceeds the cap."""
        if len(self) ** 2 > self.cap:
            return None
        return np.stack([self.row(delta, u) for u in self.words])


class _LazyMatrix:
    """Row access for languages too large to tabulate."""

    def __init__(self, lang: Language, delta: DistanceFunction):
        self.lang = lang
        self.delta = delta
        self.shape = (len(lang), len(lang))

    def __getitem__(self, i):
        return self.lang.row(self.delta, self.lang.words[i])

    def column(self, i):
        v = self.lang.words[i]
        return np.array([self.delta(u, v) for u in self.lang.words], dtype=np.int64)

    def diag(self):
        return np.array([self.delta(u, u) for u in self.lang.words], dtype=np.int64)


def _first_true(mask: np.ndarray) -> int | None:
    idx = np.flatnonzero(mask)
    return int(idx[0]) if idx.size else None


def _scan_block(words: list[Word], D, fail_fast: bool, counts: dict) -> list[tuple]:
    """Run the four metric axioms over one index set; return failures in check order.

    ``D`` supports ``D[i]`` (a row) and has ``shape[0] == len(words)``.
    """
    n = len(words)
    failures = []
    dense = isinstance(D, np.ndarray)
    diag = np.diagonal(D) if dense else D.diag()
    counts["pairs"] += n * n

    i = _first_true(diag != 0)
    if i is not None:
        failures.append(("reflexivity", (words[i],), (int(diag[i]),)))
        if fail_fast:
            return failures

    # identity and symmetry in one row sweep
    ident = sym = None
    for i in range(n):
        row = D[i]
        if ident is None:
            zero = row == 0
            zero[i] = False
            j = _first_true(zero)
            if j is not None:
                ident = ("identity", (words[i], words[j]), (int(row[j]),))
        if sym is None:
            col = D[:, i] if dense else D.column(i)
            j = _first_true(row != col)
            if j is not None:
                sym = ("symmetry", (words[i], words[j]), (int(row[j]), int(col[j])))
        if ident and sym:
            break
        if fail_fast and (ident or sym):
            break
    failures += [f for f in (ident, sym) if f]
    if fail_fast and failures:
        return failures

    tri = _triangle_dense(words, D, prune=sym is None, counts=counts) if dense else \
        _triangle_lazy(words, D, prune=sym is None, counts=counts)
    if tri:
        failures.append(tri)
    return failures


def _triangle_dense(words, D, prune, counts):
    """First ``(u, v, w)`` with ``D[u, v] > D[u, w] + D[w, v]``.

    With a symmetric table only ``u <= v`` needs checking: a violation at
    ``(v, u, w)`` is the same inequality as at ``(u, v, w)``.
    """
    n = len(words)
    for i in range(n):
        start = i if prune else 0
        row_u = D[i]
        through = row_u[:, None] + D[:, start:]          # [w, v]
        counts["triples"] += n * (n - start)
        bad = row_u[start:][None, :] > through
        cols = np.flatnonzero(bad.any(axis=0))
        if cols.size:
            j = start + int(cols[0])
            k = int(np.flatnonzero(bad[:, j - start])[0])
            return ("triangle", (words[i], words[j], words[k]),
                    (int(D[i, j]), int(D[i, k]), int(D[k, j])))
    return None


def _triangle_lazy(words, D, prune, counts):
    n = len(words)
    for i in range(n):
        start = i if prune else 0
        row_u = D[i]
        best = None  # (j, k)
        for k in range(n):
            row_w = D[k]
            counts["triples"] += n - start
            bad = row_u[start:] > row_u[k] + row_w[start:]
            j = _first_true(bad)
            if j is not None and (best is None or start + j < best[0]):
                best = (start + j, k)
        if best is not None:
            j, k = best
            return ("triangle", (words[i], words[j], words[k]),
                    (int(row_u[j]), int(row_u[k]), int(D[k][j])))
    return None


def verify_metric_axioms(delta: DistanceFunction, alphabet: Alphabet, max_len: int,
                         fail_fast: bool = False, cap: int | None = None) -> AxiomReport:
    """Check reflexivity, identity of indiscernibles, symmetry and the triangle
    inequality over every word of length at most ``max_len``.

    The first failing axiom (in that order) is reported with its
    shortlex-minimal witness.  Metrics that are only defined on equal-length
    pairs are checked on each length separately.

    With ``fail_fast`` the bound is raised one length at a time and the scan
    stops at the first bound that shows a violation.  The witness is then
    minimal within that smaller bound (``details["found_at_bound"]``), which
    is much cheaper when violations involve short words.
    """
    if fail_fast and not delta.equal_length_only:
        total = {"pairs": 0, "triples": 0}
        for bound in range(max_len + 1):
            report = _verify_metric_axioms(delta, alphabet, bound, True, cap)
            total["pairs"] += report.checked_pairs
            total["triples"] += report.checked_triples
            if not report.passed:
                report.checked_pairs = total["pairs"]
                report.checked_triples = total["triples"]
                report.max_len = max_len
                report.details["found_at_bound"] = bound
                return report
        return _report([], total, max_len)
    return _verify_metric_axioms(delta, alphabet, max_len, fail_fast, cap)


def _verify_metric_axioms(delta, alphabet, max_len, fail_fast, cap):
    lang = Language(alphabet, max_len, cap)
    counts = {"pairs": 0, "triples": 0}
    failures = []
    if delta.equal_length_only:
        for n in range(max_len + 1):
            block = lang.blocks[n]
            words = lang.words[lang.length_slice(n)]
            D = np.stack([delta.distances_to(u, block) for u in words])
            failures = _scan_block(words, D, fail_fast, counts)
            if failures:
                break
    else:
        D = lang.matrix(delta)
        if D is None:
            D = _LazyMatrix(lang, delta)
        failures = _scan_block(lang.words, D, fail_fast, counts)
    return _report(failures, counts, max_len)


def _report(failures, counts, max_len, details=None) -> AxiomReport:
    details = dict(details or {})
    if not failures:
        return AxiomReport("pass", counts["pairs"], counts["triples"], max_len, details=details)
    kind, words, values = failures[0]
    if len(failures) > 1:
        details["failed_kinds"] = [f[0] for f in failures]
    return AxiomReport("fail", counts["pairs"], counts["triples"], max_len,
                       kind=kind, witness=tuple(words), values=tuple(values), details=details)


def verify_hamming_compatible(delta: DistanceFunction, alphabet: Alphabet, max_len: int,
                              cap: int | None = None) -> AxiomReport:
    """Check ``delta(u, v) == hamming(u, v)`` for every equal-length pair."""
    lang = Language(alphabet, max_len, cap)
    counts = {"pairs": 0, "triples": 0}
    for n in range(max_len + 1):
        block = lang.blocks[n]
        words = lang.words[lang.length_slice(n)]
        for u in words:
            got = delta.distances_to(u, block)
            want = HAMMING.distances_to(u, block)
            counts["pairs"] += len(words)
            j = _first_true(got != want)
            if j is not None:
                return _report([("compatibility", (u, words[j]), (int(got[j]), int(want[j])))],
                               counts, max_len)
    return _report([], counts, max_len)


def _length_matrices(delta, lang, cap) -> Iterable[tuple[int, list[Word], np.ndarray]]:
    for n in range(lang.max_len + 1):
        block = lang.blocks[n]
        _check_cap(block.shape[0] ** 2, cap, "pairs")
        words = lang.words[lang.length_slice(n)]
        yield n, words, np.stack([delta.distances_to(u, block) for u in words])


def verify_hamming_characterization(d: DistanceFunction, alphabet: Alphabet, max_len: int,
                                    cap: int | None = None) -> AxiomReport:
    """Test the two conditions that pin the Hamming distance down among
    length-wise metrics.

    1. ``d(u, v) <= n`` for equal-length words of length ``n`` (kind ``bound``).
    2. ``d(u1 v1, u2 v2) == d(u1, u2) + d(v1, v2)`` whenever the pieces have
       matching lengths (kind ``additivity``).

    ``d`` restricted to each length is first checked to be a metric.  When
    everything holds, ``d`` must coincide with Hamming on every equal-length
    pair; a mismatch is reported with kind ``compatibility`` and
    ``details["internal_consistency"] = False``.  Only equal-length pairs are
    ever evaluated.
    """
    if max_len < 1:
        raise InvalidParameter("max_len must be positive")
    cap = DEFAULT_CAP if cap is None else cap
    lang = Language(alphabet, max_len, cap)
    N = alphabet.size
    counts = {"pairs": 0, "triples": 0}
    mats: dict[int, np.ndarray] = {}
    for n, words, D in _length_matrices(d, lang, cap):
        mats[n] = D
        failures = _scan_block(words, D, True, counts)
        if failures:
            return _report(failures, counts, max_len, {"length": n, "stage": "per-length metric"})

    for n in range(max_len + 1):
        D = mats[n]
        idx = np.argwhere(D > n)
        if idx.size:
            i, j = idx[0]
            words = lang.words[lang.length_slice(n)]
            return _report([("bound", (words[i], words[j]), (int(D[i, j]), n))], counts, max_len,
                           {"condition": 1, "length": n})

    for n in range(max_len + 1):
        D = mats[n]
        words = lang.words[lang.length_slice(n)]
        size = N**n
        bad_pair = None
        for a in range(n + 1):
            b = n - a
            # index of u1 v1 in Sigma_n is idx(u1) * N**b + idx(v1)
            split = D.reshape(N**a, N**b, N**a, N**b)
            want = mats[a][:, None, :, None] + mats[b][None, :, None, :]
            bad = (split != want).reshape(size, size)
            counts["pairs"] += size * size
            hit = np.argwhere(bad)
            if hit.size:
                i, j = (int(x) for x in hit[0])
                cand = (i, j, a)
                if bad_pair is None or cand[:2] < bad_pair[:2]:
                    bad_pair = cand
        if bad_pair is not None:
            i, j, a = bad_pair
            u, v = words[i], words[j]
            values = (int(D[i, j]), d(u[:a], v[:a]), d(u[a:], v[a:]))
            return _report([("additivity", (u, v), values)], counts, max_len,
                           {"condition": 2, "split": a, "length": n})

    for n in range(max_len + 1):
        words = lang.words[lang.length_slice(n)]
        H = np.stack([HAMMING.distances_to(u, lang.blocks[n]) for u in words])
        idx = np.argwhere(mats[n] != H)
        if idx.size:
            i, j = idx[0]
            return _report([("compatibility", (words[i], words[j]), (int(mats[n][i, j]), int(H[i, j])))],
                           counts, max_len, {"internal_consistency": False})
    return _report([], counts, max_len, {"conclusion": "d equals Hamming on every length"})


def find_dn_violation(n: int, alphabet: Alphabet) -> tuple[Word, Word, Word]:
    """Triangle violation for ``d_n`` with ``n >= 3``.

    Returns ``(u, v, w) = (a^{2n}, a^n b^n a^n, a^n)`` built from the first two
    symbols ``a, b``; ``d_n(u, v) = n + 1`` exceeds
    ``d_n(u, w) + d_n(w, v) = 1 + 2``.
    """
    if n < 3:
        raise InvalidParameter(f"d_n is a metric for n <= 2; need n >= 3, got {n}")
    if alphabet.size < 2:
        raise InvalidParameter("need at least two symbols")
    u = Word((0,) * (2 * n))
    v = Word((0,) * n + (1,) * n + (0,) * n)
    w = Word((0,) * n)
    assert d_n(u, v, n) > d_n(u, w, n) + d_n(w, v, n)
    return u, v, w
