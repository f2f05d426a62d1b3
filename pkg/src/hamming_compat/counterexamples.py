"""Metrics built by overriding a base metric on selected pairs.

Two constructions live here:

* :class:`PivotMetric` changes every distance to one distinguished *pivot*
  word.  ``delta(u, pivot)`` becomes ``base(u, anchor)`` except for a small
  table of fixed values.  Both pathological binary metrics below are of this
  form; their "otherwise" branch covers infinitely many pairs, so a finite
  table alone cannot express them.
* :class:`OverrideMetric` replaces a finite, symmetric set of pair
  distances.  This backs the user-supplied JSON override files.

Whether the result is still a metric is left to the exhaustive verifier.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import InvalidAlphabet, InvalidParameter
from .metrics import D2, T, DistanceFunction
from .words import Alphabet, Word, parse_word

BINARY = Alphabet("01")


def _rows_equal(block: np.ndarray, word: Word) -> np.ndarray:
    if block.shape[1] != len(word):
        return np.zeros(block.shape[0], dtype=bool)
    if len(word) == 0:
        return np.ones(block.shape[0], dtype=bool)
    return (block == np.asarray(word.letters, dtype=block.dtype)).all(axis=1)


def _hull(*ranges):
    ranges = [r for r in ranges if r is not None]
    return (min(r[0] for r in ranges), max(r[1] for r in ranges))


class PivotMetric(DistanceFunction):
    """``base`` everywhere except on pairs involving ``pivot``.

    For ``u != pivot``: ``delta(u, pivot) = fixed.get(u, base(u, anchor))``.
    ``fixed`` must map ``pivot`` itself to 0.
    """

    def __init__(self, name: str, base: DistanceFunction, pivot: Word, anchor: Word,
                 fixed: dict[Word, int], claimed_metric: bool = True,
                 claimed_hamming_compatible: bool = True):
        if fixed.get(pivot, 0) != 0:
            raise InvalidParameter("a pivot must be at distance 0 from itself")
        self.name = name
        self.base = base
        self.pivot = pivot
        self.anchor = anchor
        self.fixed = {pivot: 0, **fixed}
        self.claimed_metric = claimed_metric
        self.claimed_hamming_compatible = claimed_hamming_compatible

    def _to_pivot(self, u: Word) -> int:
        if u in self.fixed:
            return self.fixed[u]
        return self.base(u, self.anchor)

    def distance(self, u, v):
        if v == self.pivot:
            return self._to_pivot(u)
        if u == self.pivot:
            return self._to_pivot(v)
        return self.base(u, v)

    def distances_to(self, u, block):
        if u == self.pivot:
            out = self.base.distances_to(self.anchor, block).copy()
            for word, value in self.fixed.items():
                out[_rows_equal(block, word)] = value
            return out
        out = self.base.distances_to(u, block).copy()
        out[_rows_equal(block, self.pivot)] = self._to_pivot(u)
        return out

    def window(self, u, r):
        if u == self.pivot:
            fixed_lengths = [len(w) for w, val in self.fixed.items() if val == r]
            parts = [self.base.window(self.anchor, r)]
            parts += [(k, k) for k in fixed_lengths]
        else:
            parts = [self.base.window(u, r), (len(self.pivot), len(self.pivot))]
        if any(p is None for p in parts):
            return None
        return _hull(*parts)


class OverrideMetric(DistanceFunction):
    """``base`` with a finite table of replaced pair distances.

    The table is closed under symmetry automatically.  A pair ``(u, u)`` may
    only be overridden with 0.
    """

    def __init__(self, base: DistanceFunction, overrides: dict[tuple[Word, Word], int],
                 name: str | None = None):
        table: dict[tuple[Word, Word], int] = {}
        for (u, v), value in overrides.items():
            value = int(value)
            if value < 0:
                raise InvalidParameter(f"override value must be non-negative, got {value}")
            if u == v and value != 0:
                raise InvalidParameter("a word must stay at distance 0 from itself")
            for key in ((u, v), (v, u)):
                if table.get(key, value) != value:
                    raise InvalidParameter("conflicting override values for the same pair")
                table[key] = value
        self.base = base
        self.overrides = table
        self.name = name or f"override({base.name})"
        self._partners: dict[Word, list[tuple[Word, int]]] = {}
        for (u, v), value in table.items():
            self._partners.setdefault(u, []).append((v, value))

    def distance(self, u, v):
        if (u, v) in self.overrides:
            return self.overrides[(u, v)]
        return self.base(u, v)

    def distances_to(self, u, block):
        out = self.base.distances_to(u, block)
        partners = self._partners.get(u)
        if not partners:
            return out
        out = out.copy()
        for v, value in partners:
            out[_rows_equal(block, v)] = value
        return out

    def window(self, u, r):
        base = self.base.window(u, r)
        if base is None:
            return None
        extra = [(len(v), len(v)) for v, value in self._partners.get(u, ()) if value == r]
        return _hull(base, *extra)


def _require_binary(alphabet: Alphabet) -> None:
    if set(alphabet.symbols) != {"0", "1"} or alphabet.size != 2:
        raise InvalidAlphabet(f"this metric is defined on the alphabet {{0, 1}} only, got {alphabet.symbols!r}")


def metric_example_411(alphabet: Alphabet = BINARY) -> PivotMetric:
    """d2 with distances to the empty word redirected to ``000``.

    ``delta(000, eps) = 1`` undercuts ``d2(000, eps) = 2``; the metric is
    Hamming compatible but not weakly uniform.
    """
    _require_binary(alphabet)
    eps = Word()
    return PivotMetric(
        "example411", D2, pivot=eps, anchor=parse_word("000", alphabet),
        fixed={eps: 0, parse_word("000", alphabet): 1},
    )


def metric_example_412(alphabet: Alphabet = BINARY) -> PivotMetric:
    """T with distances to the one-letter word ``0`` redirected to ``11``.

    Here ``0`` is the word of length one, not the symbol.  Weakly uniform
    but not uniform.
    """
    _require_binary(alphabet)
    p = lambda s: parse_word(s, alphabet)  # noqa: E731
    return PivotMetric(
        "example412", T, pivot=p("0"), anchor=p("11"),
        fixed={p("0"): 0, p(""): 1, p("1"): 1, p("11"): 1},
    )


def load_override_metric(source, alphabet: Alphabet, resolve=None) -> OverrideMetric:
    """Build an :class:`OverrideMetric` from the JSON file format

    ``{"base": <registry name>, "overrides": [[u, v, value], ...]}``

    ``source`` is a path or an already-parsed dict.  ``resolve`` maps a
    registry name to a metric and defaults to :func:`registry.get_metric`.
    """
    if isinstance(source, dict):
        doc = source
        name = None
    else:
        path = Path(source)
        doc = json.loads(path.read_text())
        name = path.stem
    if not isinstance(doc, dict) or "base" not in doc:
        raise InvalidParameter("override file must be a JSON object with a 'base' field")
    if resolve is None:
        from .registry import get_metric as resolve
    base = resolve(doc["base"], alphabet)
    table = {}
    for entry in doc.get("overrides", []):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise InvalidParameter(f"override entries must be [u, v, value], got {entry!r}")
        u, v, value = entry
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidParameter(f"override value must be an integer, got {value!r}")
        key = (parse_word(u, alphabet), parse_word(v, alphabet))
        if key in table and table[key] != value:
            raise InvalidParameter(f"conflicting override values for ({u!r}, {v!r})")
        table[key] = value
    return OverrideMetric(base, table, name=doc.get("name", name))
