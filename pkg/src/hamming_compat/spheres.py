"""Sizes of d2-spheres, in closed form and by direct enumeration.

For a center ``u`` of length ``k`` the words of length ``j`` at d2-distance
exactly ``r`` are counted as follows.  Put ``a = ceil(|k - j| / 2)``.  The
length gap costs ``a``, so the common prefix must differ in exactly
``r - a`` places:

    C(j, r - a) (N - 1)^(r - a)               if j <= k
    C(k, r - a) (N - 1)^(r - a) N^(j - k)     if j >  k

Only lengths ``k - 2r <= j <= k + 2r`` can contribute.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import InvalidParameter, NoLengthBound
from .metrics import D2, DistanceFunction
from .words import DEFAULT_CAP, Alphabet, Word, _check_cap, row_to_word, words_array


@dataclass
class SphereCount:
    center: Word
    radius: int
    total: int
    by_length: dict[int, int] = field(default_factory=dict)

    def to_dict(self, alphabet: Alphabet) -> dict:
        return {
            "center": alphabet.render(self.center),
            "radius": self.radius,
            "total": str(self.total),
            "by_length": {str(j): str(c) for j, c in sorted(self.by_length.items())},
        }


def binom(n: int, t: int) -> int:
    """Binomial coefficient, zero outside ``0 <= t <= n``."""
    if t < 0 or t > n or n < 0:
        return 0
    return comb(n, t)


def sphere_size_fixed_length(u: Word, j: int, r: int, alphabet: Alphabet | int) -> int:
    """Number of length-``j`` words at d2-distance exactly ``r`` from ``u``."""
    if j < 0 or r < 0:
        raise InvalidParameter("length and radius must be non-negative")
    N = alphabet if isinstance(alphabet, int) else alphabet.size
    k = len(u)
    a = -(-abs(k - j) // 2)
    t = r - a
    if t < 0 or t > min(j, k):
        return 0
    if j <= k:
        return binom(j, t) * (N - 1) ** t
    return binom(k, t) * (N - 1) ** t * N ** (j - k)


def sphere_size(u: Word, r: int, alphabet: Alphabet | int) -> SphereCount:
    if r < 0:
        raise InvalidParameter("radius must be non-negative")
    k = len(u)
    by_length = {}
    for j in range(max(0, k - 2 * r), k + 2 * r + 1):
        c = sphere_size_fixed_length(u, j, r, alphabet)
        if c:
            by_length[j] = c
    return SphereCount(u, r, sum(by_length.values()), by_length)


def enumerate_sphere(delta: DistanceFunction, u: Word, r: int, alphabet: Alphabet,
                     cap: int | None = None) -> list[Word]:
    """Every word at ``delta``-distance exactly ``r`` from ``u``, in shortlex order.

    Candidates are restricted to the length window reported by
    ``delta.window(u, r)``; metrics without one raise :class:`NoLengthBound`.
    """
    window = delta.window(u, r)
    if window is None:
        raise NoLengthBound(f"{delta.name} gives no length window for sphere enumeration")
    lo, hi = window
    cap = DEFAULT_CAP if cap is None else cap
    N = alphabet.size
    _check_cap(sum(N**j for j in range(lo, hi + 1)), cap, "candidate words")
    out = []
    for j in range(lo, hi + 1):
        block = words_array(alphabet, j, cap)
        hits = np.flatnonzero(delta.distances_to(u, block) == r)
        out.extend(row_to_word(block[i]) for i in hits)
    return out


def sphere_count_by_enumeration(delta: DistanceFunction, u: Word, r: int, alphabet: Alphabet,
                                cap: int | None = None) -> SphereCount:
    """Same shape as :func:`sphere_size`, counted by brute force."""
    by_length: dict[int, int] = {}
    for v in enumerate_sphere(delta, u, r, alphabet, cap):
        by_length[len(v)] = by_length.get(len(v), 0) + 1
    return SphereCount(u, r, sum(by_length.values()), by_length)


