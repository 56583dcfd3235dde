"""Möbius values of word intervals: defining recursion and signed chain counts."""
from __future__ import annotations

import threading
from typing import Callable, Iterator, Optional

import numpy as np

from .interval import Interval, build_interval
from .words import C, GroundPoset, Word

# float shadow products must stay below this for int64 products to be exact
_INT64_SAFE = float(2**60)


def _nonneg_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of nonnegative integer arrays, int64 when provably safe."""
    if a.dtype != object and b.dtype != object:
        shadow = a.astype(np.float64) @ b.astype(np.float64)
        if shadow.size == 0 or shadow.max() < _INT64_SAFE:
            return a.astype(np.int64) @ b.astype(np.int64)
    return np.dot(a.astype(object), b.astype(object))


def _sub(interval: Interval, start: int, end: int) -> np.ndarray:
    """Indices of the elements z with start <= z <= end, in interval order."""
    leq = interval.leq
    return np.flatnonzero(leq[start, :] & leq[:, end])


def chain_counts(
    interval: Interval,
    start,
    end,
    intermediate: Optional[Callable[[Word], bool]] = None,
) -> list[int]:
    """Unsigned census ``[C_0, C_1, ...]`` of chains ``start = t_0 < ... < t_k = end``.

    If ``intermediate`` is given, every ``t_1 .. t_(k-1)`` must satisfy it.
    """
    i, j = interval.index(start), interval.index(end)
    if i == j:
        return [1]
    idx = _sub(interval, i, j)
    if idx.size == 0:
        return [0]
    lt = interval.strict_less[np.ix_(idx, idx)]
    n = idx.size
    allowed = np.ones(n, dtype=bool)
    if intermediate is not None:
        allowed = np.array([intermediate(interval.elements[k]) for k in idx], dtype=bool)
    allowed[0] = allowed[-1] = False  # idx[0] is start, idx[-1] is end
    vec = np.zeros((1, n), dtype=np.int64)
    vec[0, 0] = 1
    counts = [0]
    while vec.any():
        vec = _nonneg_matmul(vec, lt)
        counts.append(int(vec[0, -1]))
        vec = vec * allowed
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def enumerate_chains(interval: Interval, start, end) -> Iterator[tuple[Word, ...]]:
    """Yield every chain from ``start`` to ``end`` explicitly. Exponential; oracle use."""
    i, j = interval.index(start), interval.index(end)
    lt = interval.strict_less

    def walk(path):
        last = path[-1]
        if last == j:
            yield tuple(interval.elements[k] for k in path)
            return
        for k in np.flatnonzero(lt[last, :] & (lt[:, j] | (np.arange(len(interval)) == j))):
            yield from walk(path + [int(k)])

    yield from walk([i])


def mob(interval: Interval, start, end, intermediate=None) -> int:
    """Signed chain count ``sum_{k>=1} (-1)^k C_k`` over the selected chains.

    Over all chains of a proper pair this is the Möbius value; for
    ``start == end`` the selection is empty and the result is 0.
    """
    counts = chain_counts(interval, start, end, intermediate)
    return sum((-1) ** k * ck for k, ck in enumerate(counts) if k >= 1)


def mobius_recursive(u, v, P: GroundPoset, interval: Optional[Interval] = None) -> int:
    """mu(u, v) from mu(u,u) = 1 and mu(u,v) = -sum_{u<=z<v} mu(u,z)."""
    iv = interval if interval is not None else build_interval(u, v, P)
    i, j = iv.index(u), iv.index(v)
    idx = _sub(iv, i, j)
    lt = iv.strict_less[np.ix_(idx, idx)]
    mu = np.zeros(idx.size, dtype=object)
    mu[0] = 1
    for k in range(1, idx.size):
        mu[k] = -mu[:k][lt[:k, k]].sum()
    return int(mu[-1])


def mobius_hall(u, v, P: GroundPoset, interval: Optional[Interval] = None) -> int:
    """mu(u, v) as the alternating count of chains from u to v."""
    iv = interval if interval is not None else build_interval(u, v, P)
    counts = chain_counts(iv, u, v)
    return sum((-1) ** k * ck for k, ck in enumerate(counts))


def mobius_matrix(interval: Interval) -> np.ndarray:
    """All mu(x, y) within ``interval`` by the defining recursion (object dtype, 0 off-order)."""
    n = len(interval)
    lt = interval.strict_less
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        up = np.flatnonzero(lt[i, :])
        row = out[i]
        row[i] = 1
        # entries of the row outside [x, .) are still 0, so summing all predecessors is safe
        for k in up:
            row[k] = -row[:k][lt[:k, k]].sum()
    return out


def hall_matrix(interval: Interval) -> np.ndarray:
    """All mu(x, y) within ``interval`` as ``sum_k (-1)^k Z^k`` with Z the strict zeta matrix."""
    n = len(interval)
    z = interval.strict_less.astype(np.int64)
    power = np.eye(n, dtype=np.int64)
    total = np.zeros((n, n), dtype=object)
    sign = 1
    while power.any():
        total = total + sign * power.astype(object)
        power = _nonneg_matmul(power, z)
        sign = -sign
    return total


def mob_pat(u, n: int, P: GroundPoset) -> int:
    """Signed count of chains ``u < t_1 < ... < t_r < c^n`` with every ``|t_i| = n``.

    A chain with ``r`` intermediates has ``r + 1`` arrows and sign ``(-1)^(r+1)``.
    By convention ``mob_pat(c^n, n) == -1``.
    """
    u = P.check_word(u)
    top = Word.c(n)
    if u == top:
        return -1
    iv = build_interval(u, top, P)
    return mob(iv, u, top, intermediate=lambda w: len(w) == n)


def is_c_power(w) -> bool:
    return all(x == C for x in w)


class MobiusCache:
    """Memoized mobius_recursive.

    Targets of the form ``c^n`` are keyed by ``(type(u), n)`` since mu(u, c^n)
    depends only on the word type of ``u``; other pairs are keyed by the pair.
    Inserts use ``dict.setdefault`` under a lock; concurrent misses may compute
    the same value twice, which is harmless because values are deterministic.
    """

    def __init__(self, P: GroundPoset):
        self.P = P
        self._by_type: dict = {}
        self._by_pair: dict = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def _key(self, u: Word, v: Word):
        if is_c_power(v):
            return self._by_type, (u.type, len(v))
        return self._by_pair, (u, v)

    def mu(self, u, v) -> int:
        u, v = self.P.check_word(u), self.P.check_word(v)
        table, key = self._key(u, v)
        val = table.get(key)
        if val is not None:
            self.hits += 1
            return val
        self.misses += 1
        val = mobius_recursive(u, v, self.P)
        with self._lock:
            return table.setdefault(key, val)

    def prime(self, u, v, value: int) -> None:
        """Insert a value computed elsewhere (e.g. by a worker process)."""
        u, v = self.P.check_word(u), self.P.check_word(v)
        table, key = self._key(u, v)
        with self._lock:
            table.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._by_type) + len(self._by_pair)
