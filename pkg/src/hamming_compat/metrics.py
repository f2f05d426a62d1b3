"""Integer distance functions on words: Hamming, truncated Hamming, T, d_n, d2.

Every distance here is an exact Python/numpy integer.  The family

    d_n(u, v) = truncated_hamming(u, v) + ceil(|l(u) - l(v)| / n)

contains ``T`` (n = 1) and ``d2`` (n = 2); for n >= 3 it is not a metric.

The length penalty ``gamma_n`` is defined piecewise by residue of the length
gap modulo n.  Read literally, the non-divisible branch would also admit
residue 0 and clash with the divisible branch, so residue 0 is taken to
belong to the divisible branch only.  Both branches then agree with the
ceiling ``ceil(gap / n)``, which is what is implemented.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import InvalidParameter, LengthMismatch
from .words import Word


def hamming(u: Word, v: Word) -> int:
    """Number of positions where two equal-length words differ."""
    if len(u) != len(v):
        raise LengthMismatch(len(u), len(v))
    return sum(a != b for a, b in zip(u.letters, v.letters))


def truncated_hamming(u: Word, v: Word) -> int:
    """Hamming distance after cutting the longer word down to the shorter length.

    Not a metric: every word is at distance 0 from the empty word.
    """
    return sum(a != b for a, b in zip(u.letters, v.letters))


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def gamma_n(u: Word, v: Word, n: int) -> int:
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    return ceil_div(abs(len(u) - len(v)), n)


def d_n(u: Word, v: Word, n: int) -> int:
    return truncated_hamming(u, v) + gamma_n(u, v, n)


def d2(u: Word, v: Word) -> int:
    return truncated_hamming(u, v) + ceil_div(abs(len(u) - len(v)), 2)


def metric_T(u: Word, v: Word) -> int:
    return truncated_hamming(u, v) + abs(len(u) - len(v))


def _trunc_hamming_rows(u: Word, block: np.ndarray) -> np.ndarray:
    """Truncated Hamming distance from ``u`` to every row of ``block``."""
    m = min(len(u), block.shape[1])
    if m == 0:
        return np.zeros(block.shape[0], dtype=np.int64)
    return (block[:, :m] != np.asarray(u.letters[:m], dtype=block.dtype)).sum(axis=1, dtype=np.int64)


class DistanceFunction:
    """A total integer-valued map on pairs of words, with claimed properties.

    Subclasses implement :meth:`distance`; :meth:`distances_to` is the batch
    form used by the exhaustive checkers and can be overridden with a
    vectorised version.  ``window(u, r)`` returns an inclusive length range
    containing every word at distance exactly ``r`` from ``u``, or ``None``
    when no such bound is known.
    """

    name: str = "distance"
    claimed_metric: bool = False
    claimed_hamming_compatible: bool = False
    #: Only defined on pairs of equal-length words (plain Hamming distance).
    equal_length_only: bool = False

    def distance(self, u: Word, v: Word) -> int:
        raise NotImplementedError

    def __call__(self, u: Word, v: Word) -> int:
        return self.distance(u, v)

    def distances_to(self, u: Word, block: np.ndarray) -> np.ndarray:
        """Distances from ``u`` to each row of ``block`` (rows are equal-length words)."""
        return np.fromiter(
            (self.distance(u, Word(tuple(int(x) for x in row))) for row in block),
            dtype=np.int64,
            count=block.shape[0],
        )

    def window(self, u: Word, r: int) -> tuple[int, int] | None:
        return None

    def describe(self) -> dict:
        return {
            "name": self.name,
            "claimed_metric": self.claimed_metric,
            "claimed_hamming_compatible": self.claimed_hamming_compatible,
        }

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class HammingDistance(DistanceFunction):
    name = "hamming"
    claimed_metric = True
    claimed_hamming_compatible = True
    equal_length_only = True

    def distance(self, u, v):
        return hamming(u, v)

    def distances_to(self, u, block):
        if block.shape[1] != len(u):
            raise LengthMismatch(len(u), block.shape[1])
        return _trunc_hamming_rows(u, block)

    def window(self, u, r):
        return (len(u), len(u))


class TruncatedHamming(DistanceFunction):
    name = "truncated-hamming"

    def distance(self, u, v):
        return truncated_hamming(u, v)

    def distances_to(self, u, block):
        return _trunc_hamming_rows(u, block)


class LengthPenaltyMetric(DistanceFunction):
    """``truncated_hamming + ceil(gap / n)``; ``n = 1`` is T, ``n = 2`` is d2."""

    claimed_hamming_compatible = True

    def __init__(self, n: int, name: str | None = None):
        if n < 1:
            raise InvalidParameter(f"n must be >= 1, got {n}")
        self.n = n
        self.name = name or f"dn:{n}"
        self.claimed_metric = n <= 2

    def distance(self, u, v):
        return truncated_hamming(u, v) + ceil_div(abs(len(u) - len(v)), self.n)

    def distances_to(self, u, block):
        gap = abs(len(u) - block.shape[1])
        return _trunc_hamming_rows(u, block) + ceil_div(gap, self.n)

    def window(self, u, r):
        return (max(0, len(u) - self.n * r), len(u) + self.n * r)


class CallableMetric(DistanceFunction):
    """Wrap a plain ``f(u, v) -> int`` as a :class:`DistanceFunction`."""

    def __init__(
        self,
        name: str,
        func: Callable[[Word, Word], int],
        claimed_metric: bool = False,
        claimed_hamming_compatible: bool = False,
        window: Callable[[Word, int], tuple[int, int] | None] | None = None,
        equal_length_only: bool = False,
    ):
        self.name = name
        self.func = func
        self.claimed_metric = claimed_metric
        self.claimed_hamming_compatible = claimed_hamming_compatible
        self.equal_length_only = equal_length_only
        self._window = window

    def distance(self, u, v):
        return int(self.func(u, v))

    def window(self, u, r):
        return self._window(u, r) if self._window else None


class GammaExcess:
    """``delta - truncated_hamming``; zero on equal lengths iff ``delta`` is Hamming compatible."""

    def __init__(self, base: DistanceFunction):
        self.base = base

    def __call__(self, u: Word, v: Word) -> int:
        return self.base(u, v) - truncated_hamming(u, v)

    def values_to(self, u: Word, block: np.ndarray) -> np.ndarray:
        return self.base.distances_to(u, block) - _trunc_hamming_rows(u, block)


def excess_gamma(delta: DistanceFunction, u: Word, v: Word) -> int:
    """Excess of ``delta`` over truncated Hamming; may be negative, never clamped."""
    return delta(u, v) - truncated_hamming(u, v)


HAMMING = HammingDistance()
TRUNCATED_HAMMING = TruncatedHamming()
T = LengthPenaltyMetric(1, name="T")
D2 = LengthPenaltyMetric(2, name="d2")


def dn_metric(n: int) -> LengthPenaltyMetric:
    return LengthPenaltyMetric(n)
