"""Finite intervals ``[u, v]`` of the word poset and their order matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np

from .words import C, GroundPoset, NotComparable, Word, _leq, words_up_to


def _generators(w: Word, s: int):
    """Words one elementary step below ``w``: drop a letter, or lower a c to some a_i.

    The reflexive-transitive closure of this relation is the subword order.
    """
    for i in range(len(w)):
        yield w[:i] + w[i + 1:]
        if w[i] == C:
            for a in range(1, s + 1):
                yield w[:i] + (a,) + w[i + 1:]


def _bits_to_row(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


@dataclass(frozen=True, eq=False)
class Interval:
    """Words ``z`` with ``lower <= z <= upper``.

    ``elements`` is sorted by length then tag order (a linear extension of the
    subword order); ``strict_less[i, j]`` is True iff ``elements[i] < elements[j]``.
    """

    lower: Word
    upper: Word
    s: int
    elements: tuple[Word, ...]
    strict_less: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w) -> bool:
        return tuple(w) in self._index

    def index(self, w) -> int:
        return self._index[tuple(w)]

    @property
    def leq(self) -> np.ndarray:
        return self.strict_less | np.eye(len(self), dtype=bool)

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(i, j)`` (transitive reduction of ``strict_less``)."""
        lt = self.strict_less.astype(np.float32)
        two_step = (lt @ lt) > 0
        cov = self.strict_less & ~two_step
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(cov))]

    def to_dict(self) -> dict:
        return {
            "lower": str(self.lower),
            "upper": str(self.upper),
            "s": str(self.s),
            "elements": [str(w) for w in self.elements],
            "edges": [[i, j] for i, j in self.covers()],
        }


def build_interval(u, v, P: GroundPoset) -> Interval:
    """Enumerate ``[u, v]`` by generating every word of admissible length and filtering."""
    u, v = P.check_word(u), P.check_word(v)
    if not _leq(u, v):
        raise NotComparable(f"{u} is not below {v}")
    elements = tuple(
        z for z in words_up_to(P, len(v), start=len(u)) if _leq(u, z) and _leq(z, v)
    )
    index = {w: i for i, w in enumerate(elements)}
    n = len(elements)
    down = [0] * n
    for j, w in enumerate(elements):
        mask = 1 << j
        for g in _generators(w, P.s):
            i = index.get(g)
            if i is not None:
                mask |= down[i]
        down[j] = mask
    lt = np.zeros((n, n), dtype=bool)
    for j in range(n):
        lt[:, j] = _bits_to_row(down[j] & ~(1 << j), n)
    lt.flags.writeable = False
    return Interval(u, v, P.s, elements, lt)


def boolean_rank_check(w, l: int, P: GroundPoset) -> Optional[int]:
    """Rank ``l - k`` if ``[w, c^l]`` looks like a Boolean lattice, else None.

    ``w`` must have length ``l``; ``k`` is its number of c's. The check is on
    cardinality ``2^(l-k)`` and on the level sizes ``C(l-k, j)`` by c-count.
    """
    w = P.check_word(w)
    if len(w) != l:
        raise ValueError(f"word {w} has length {len(w)}, expected {l}")
    r = l - w.count_c
    iv = build_interval(w, Word.c(l), P)
    if len(iv) != 2 ** r:
        return None
    levels = [0] * (r + 1)
    for z in iv.elements:
        j = z.count_c - w.count_c
        if len(z) != l or not 0 <= j <= r:
            return None
        levels[j] += 1
    if levels != [comb(r, j) for j in range(r + 1)]:
        return None
    return r
