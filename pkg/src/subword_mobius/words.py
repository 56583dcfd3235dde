"""Words over the ground poset P_s and the generalized subword order.

The ground poset has ``s`` pairwise incomparable minimal letters
``a_1, ..., a_s`` and one top letter ``c`` with ``a_i < c``. A letter is
stored as a plain ``int``: ``i`` for ``a_i`` and ``C == 0`` for ``c``.
Embedding positions are 1-based throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Optional

C = 0


class WordError(ValueError):
    """Malformed word text or a letter outside the ground poset."""


class NotComparable(ValueError):
    """Raised when an operation needs ``u <= v`` and it does not hold."""


@dataclass(frozen=True)
class GroundPoset:
    s: int

    def __post_init__(self):
        if not isinstance(self.s, int) or self.s < 1:
            raise ValueError(f"s must be a positive integer, got {self.s!r}")

    @property
    def alphabet(self) -> tuple[int, ...]:
        """Letters in tag order ``a_1 < ... < a_s < c``."""
        return tuple(range(1, self.s + 1)) + (C,)

    def check_letter(self, x: int) -> int:
        if x != C and not (1 <= x <= self.s):
            raise WordError(f"letter index {x} outside 1..{self.s}")
        return x

    def check_word(self, w: Iterable[int]) -> "Word":
        w = w if isinstance(w, Word) else Word(w)
        for x in w:
            self.check_letter(x)
        return w


class Word(tuple):
    """Immutable word; equality is letter-sequence equality."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, letters)

    @classmethod
    def a(cls, i: int, m: int = 1) -> "Word":
        return cls((i,) * m)

    @classmethod
    def c(cls, n: int = 1) -> "Word":
        return cls((C,) * n)

    @classmethod
    def parse(cls, text: str, s: int) -> "Word":
        """Parse ``a1,c,a2``-style text; ``e`` is the empty word."""
        return parse_word(text, s)

    @property
    def count_c(self) -> int:
        return sum(1 for x in self if x == C)

    @property
    def type(self) -> tuple[int, int]:
        return (len(self), self.count_c)

    def sort_key(self) -> tuple:
        return (len(self), tuple(x if x != C else float("inf") for x in self))

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def __str__(self) -> str:
        if not self:
            return "e"
        return ",".join("c" if x == C else f"a{x}" for x in self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def parse_word(text: str, s: int) -> Word:
    text = text.strip()
    if text == "e":
        return Word()
    if not text:
        raise WordError("empty word text (use 'e' for the empty word)")
    letters = []
    for pos, tok in enumerate(text.split(","), start=1):
        tok = tok.strip()
        if not tok:
            raise WordError(f"empty token at position {pos}")
        if tok == "c":
            letters.append(C)
        elif tok[0] == "a" and tok[1:].isdigit():
            i = int(tok[1:])
            if i < 1:
                raise WordError(f"subscript {i} at position {pos} must be >= 1")
            if i > s:
                raise WordError(f"subscript {i} exceeds s={s} (position {pos})")
            letters.append(i)
        else:
            raise WordError(f"unknown token {tok!r} at position {pos}")
    return Word(letters)


def letter_leq(x: int, y: int, P: GroundPoset) -> bool:
    P.check_letter(x)
    P.check_letter(y)
    return x == y or y == C


def _leq(u: tuple, w: tuple) -> bool:
    # greedy leftmost matching; no validation
    n = len(w)
    if len(u) > n:
        return False
    j = 0
    for x in u:
        while j < n and not (w[j] == x or w[j] == C):
            j += 1
        if j == n:
            return False
        j += 1
    return True


def word_leq(u: Iterable[int], w: Iterable[int], P: GroundPoset) -> bool:
    """True iff ``u <= w`` in the generalized subword order over ``P``."""
    return _leq(P.check_word(u), P.check_word(w))


def rightmost_embedding(u, w, P: GroundPoset) -> Optional[tuple[int, ...]]:
    """Componentwise-maximal embedding of ``u`` into ``w`` (1-based), or None."""
    u, w = P.check_word(u), P.check_word(w)
    j = len(w) - 1
    out = []
    for x in reversed(u):
        while j >= 0 and not (w[j] == x or w[j] == C):
            j -= 1
        if j < 0:
            return None
        out.append(j + 1)
        j -= 1
    return tuple(reversed(out))


def enumerate_embeddings(u, w, P: GroundPoset) -> list[tuple[int, ...]]:
    """Every embedding of ``u`` into ``w`` in lexicographic order. Exhaustive."""
    u, w = P.check_word(u), P.check_word(w)
    return [
        tuple(j + 1 for j in idx)
        for idx in combinations(range(len(w)), len(u))
        if all(w[j] == x or w[j] == C for x, j in zip(u, idx))
    ]


def words_of_length(P: GroundPoset, n: int) -> Iterator[Word]:
    """All words of length ``n`` in length-then-tag lexicographic order."""
    for letters in product(P.alphabet, repeat=n):
        yield Word(letters)


def words_up_to(P: GroundPoset, n: int, start: int = 0) -> Iterator[Word]:
    for k in range(start, n + 1):
        yield from words_of_length(P, k)


def words_of_type(P: GroundPoset, n: int, q: int) -> Iterator[Word]:
    """All words of length ``n`` with exactly ``q`` c's (C(n,q) * s^(n-q) of them)."""
    if not (0 <= q <= n):
        return
    for cpos in combinations(range(n), q):
        rest = [i for i in range(n) if i not in cpos]
        for fill in product(range(1, P.s + 1), repeat=n - q):
            w = [C] * n
            for i, x in zip(rest, fill):
                w[i] = x
            yield Word(w)


def canonical_word(m: int, p: int) -> Word:
    """The representative ``a_1^(m-p) c^p`` of word type ``(m, p)``."""
    if not (0 <= p <= m):
        raise ValueError(f"invalid word type ({m}, {p})")
    return Word((1,) * (m - p) + (C,) * p)
