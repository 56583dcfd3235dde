"""Counting words above a word type, and the chain quantity T(k, n).

``M((m,p),(n,q))`` is the number of words of length ``n`` with ``q`` c's that
lie above ``a_1^(m-p) c^p``. It does not depend on which word of type
``(m, p)`` is used as the lower end.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .chebyshev import binom
from .words import GroundPoset, Word, _leq, canonical_word, words_of_type


@dataclass(frozen=True, order=True)
class WordType:
    m: int
    p: int

    def __post_init__(self):
        if not (0 <= self.p <= self.m):
            raise ValueError(f"invalid word type ({self.m}, {self.p}): need 0 <= p <= m")

    @property
    def canonical(self) -> Word:
        return canonical_word(self.m, self.p)


def word_type(w: Iterable[int]) -> WordType:
    w = tuple(w)
    return WordType(len(w), sum(1 for x in w if x == 0))


def _as_type(t) -> WordType:
    return t if isinstance(t, WordType) else WordType(*t)


def _valid(m: int, p: int) -> bool:
    return 0 <= p <= m


@lru_cache(maxsize=None)
def _brute(s: int, m: int, p: int, n: int, q: int) -> int:
    base = canonical_word(m, p)
    return sum(1 for w in words_of_type(GroundPoset(s), n, q) if _leq(base, w))


def count_M_bruteforce(s: int, lower, upper) -> int:
    """M by enumerating every word of the upper type and testing the order."""
    lo, up = _as_type(lower), _as_type(upper)
    GroundPoset(s)
    return _brute(s, lo.m, lo.p, up.m, up.p)


def _m_total(s: int, m: int, p: int, n: int, q: int) -> int:
    # out-of-domain arguments count nothing
    if not (_valid(m, p) and _valid(n, q)):
        return 0
    return _brute(s, m, p, n, q)


@lru_cache(maxsize=None)
def _rec(s: int, m: int, p: int, n: int, q: int) -> int:
    if not (_valid(m, p) and _valid(n, q)):
        return 0
    if not (1 <= p <= m <= n and p <= q <= n):
        return _brute(s, m, p, n, q)
    # split on the position of the last c of the upper word
    return sum(_rec(s, m - 1, p - 1, n - 1 - i, q - 1) * s**i for i in range(n - m + 1))


def count_M_recurrence(s: int, lower, upper) -> int:
    """M by peeling the last c off both words; brute force outside that lemma's domain."""
    lo, up = _as_type(lower), _as_type(upper)
    GroundPoset(s)
    return _rec(s, lo.m, lo.p, up.m, up.p)


def count_M_iterated(s: int, lower, upper, depth: int) -> int:
    """M after peeling ``depth`` c's at once.

    ``sum_{k=0}^{n-m} M((m-i,p-i),(n-i-k,q-i)) s^k C(i+k-1, i-1)`` with ``i = depth``;
    needs ``1 <= depth <= p <= q``. ``depth = p`` reduces to an all-a lower word.
    """
    lo, up = _as_type(lower), _as_type(upper)
    m, p, n, q = lo.m, lo.p, up.m, up.p
    i = depth
    if not (1 <= i <= p <= q and m <= n):
        raise ValueError(f"depth {i} outside 1..p with p <= q and m <= n")
    return sum(
        _m_total(s, m - i, p - i, n - i - k, q - i) * s**k * binom(i + k - 1, i - 1)
        for k in range(n - m + 1)
    )


def chain_T_closed(s: int, k: int, n: int) -> int:
    """T(k, n) = -sum_{i=k}^{n} C(n,i) s^(n-i) (-1)^(n-i); 0 if k > n, -1 if k == n."""
    if k > n:
        return 0
    if k < 0:
        raise ValueError("k must be >= 0")
    return -sum(binom(n, i) * s ** (n - i) * (-1) ** (n - i) for i in range(k, n + 1))


def alternating_sum_M(s: int, alpha: int, beta: int) -> int:
    """sum_{i=0}^{beta} M((alpha,0),(beta,i)) (-1)^i, by brute force."""
    if not (1 <= alpha <= beta):
        raise ValueError(f"need 1 <= alpha <= beta, got alpha={alpha}, beta={beta}")
    return sum((-1) ** i * _brute(s, alpha, 0, beta, i) for i in range(beta + 1))
