"""Alphabets, words, and bounded enumeration in shortlex order.

A :class:`Word` stores symbol *indices*, not characters, so the same word
object is meaningful for any alphabet of sufficient size.  Rendering and
parsing go through an :class:`Alphabet`.

Shortlex (length first, then lexicographic by symbol index) is the order
used everywhere a "first" or "minimal" word is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .errors import CapExceeded, InvalidAlphabet, UnknownSymbol

#: Default bound on the number of words any exhaustive operation may touch.
DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct single-character symbols."""

    symbols: str

    def __post_init__(self):
        if not isinstance(self.symbols, str) or not self.symbols:
            raise InvalidAlphabet("alphabet must be a non-empty string of symbols")
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidAlphabet(f"alphabet symbols are not distinct: {self.symbols!r}")

    @property
    def size(self) -> int:
        return len(self.symbols)

    N = size

    def index(self, symbol: str) -> int:
        return self.symbols.index(symbol)

    def word(self, text: str) -> Word:
        return parse_word(text, self)

    def render(self, word: Word) -> str:
        return "".join(self.symbols[i] for i in word.letters)

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return self.symbols


@total_ordering
@dataclass(frozen=True, eq=True)
class Word:
    """Immutable finite sequence of symbol indices; ``Word()`` is the empty word."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(int(i) for i in self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def __lt__(self, other: Word) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return shortlex_key(self) < shortlex_key(other)

    def __repr__(self):
        return f"Word({''.join(map(str, self.letters)) if max(self.letters, default=0) < 10 else self.letters!r})"

    @property
    def length(self) -> int:
        return len(self.letters)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.letters, dtype=np.int64)


EMPTY = Word()


def shortlex_key(word: Word) -> tuple[int, tuple[int, ...]]:
    return (len(word.letters), word.letters)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Encode ``text`` as a word over ``alphabet``; ``""`` gives the empty word."""
    letters = []
    lookup = {c: i for i, c in enumerate(alphabet.symbols)}
    for pos, ch in enumerate(text):
        try:
            letters.append(lookup[ch])
        except KeyError:
            raise UnknownSymbol(pos, ch) from None
    return Word(tuple(letters))


def _check_cap(count: int, cap: int | None, what: str = "words") -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if count > cap:
        raise CapExceeded(count, cap, what)


def language_size(alphabet: Alphabet | int, max_len: int) -> int:
    """Number of words of length ``0..max_len``."""
    n = alphabet if isinstance(alphabet, int) else alphabet.size
    if n == 1:
        return max_len + 1
    return (n ** (max_len + 1) - 1) // (n - 1)


def enumerate_words(alphabet: Alphabet, length: int, cap: int | None = None) -> list[Word]:
    """All ``N**length`` words of the given length, lexicographically."""
    _check_cap(alphabet.size**length, cap)
    return [Word(t) for t in product(range(alphabet.size), repeat=length)]


def enumerate_language(alphabet: Alphabet, max_len: int, cap: int | None = None) -> list[Word]:
    """All words of length ``0..max_len`` in shortlex order."""
    _check_cap(language_size(alphabet, max_len), cap)
    out: list[Word] = []
    for n in range(max_len + 1):
        out.extend(enumerate_words(alphabet, n, cap))
    return out


@lru_cache(maxsize=64)
def _words_array(n_symbols: int, length: int) -> np.ndarray:
    count = n_symbols**length
    dtype = np.uint8 if n_symbols <= 256 else np.int32
    if length == 0:
        arr = np.zeros((1, 0), dtype=dtype)
    else:
        powers = n_symbols ** np.arange(length - 1, -1, -1, dtype=np.int64)
        arr = ((np.arange(count, dtype=np.int64)[:, None] // powers) % n_symbols).astype(dtype)
    arr.setflags(write=False)
    return arr


def words_array(alphabet: Alphabet | int, length: int, cap: int | None = None) -> np.ndarray:
    """``(N**length, length)`` array of symbol indices, rows in lexicographic order.

    Row ``i`` is the base-``N`` expansion of ``i``, so row order agrees with
    :func:`enumerate_words`.  The array is cached and read-only.
    """
    n = alphabet if isinstance(alphabet, int) else alphabet.size
    _check_cap(n**length, cap)
    return _words_array(n, length)


def row_to_word(row: Sequence[int]) -> Word:
    return Word(tuple(int(x) for x in row))


def word_index(word: Word, n_symbols: int) -> int:
    """Position of ``word`` within ``words_array(N, len(word))``."""
    idx = 0
    for letter in word.letters:
        idx = idx * n_symbols + letter
    return idx
