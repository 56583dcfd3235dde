"""Generalized Chebyshev polynomials ``T^s_k`` with exact integer coefficients.

``T^s_0 = 1``, ``T^s_1 = (s-1) X`` and ``T^s_{k+2} = s X T^s_{k+1} - T^s_k``.
``s = 2`` gives the classical Chebyshev polynomials of the first kind.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Union


@dataclass(frozen=True)
class Polynomial:
    """Dense integer polynomial, ``coefficients[m]`` is the coefficient of ``X^m``."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, m: int) -> int:
        return coefficient(self, m)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return Polynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, k: int) -> "Polynomial":
        return Polynomial(k * c for c in self.coefficients)

    def shift(self, d: int = 1) -> "Polynomial":
        """Multiply by ``X^d``."""
        if not self.coefficients:
            return self
        return Polynomial((0,) * d + self.coefficients)

    def __call__(self, x):
        return evaluate(self, x)

    def __str__(self) -> str:
        terms = [f"{c}*X^{m}" for m, c in enumerate(self.coefficients) if c]
        return " + ".join(reversed(terms)) or "0"


def coefficient(p: Polynomial, m: int) -> int:
    if m < 0:
        raise ValueError("degree must be non-negative")
    return p.coefficients[m] if m < len(p.coefficients) else 0


def evaluate(p: Polynomial, x: Union[int, float, Fraction]):
    """Horner evaluation."""
    acc = 0
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def binom(a: int, b: int) -> int:
    """Binomial coefficient, 0 whenever ``b > a``, ``b < 0`` or ``a < 0``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _check(s: int, k: int) -> None:
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"s must be >= 1, got {s!r}")
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"index must be >= 0, got {k!r}")


@lru_cache(maxsize=None)
def _recurrence_pair(s: int, k: int) -> tuple[Polynomial, Polynomial]:
    # (T_k, T_{k+1}), built iteratively to avoid deep recursion
    prev, cur = Polynomial([1]), Polynomial([0, s - 1])
    for _ in range(k):
        prev, cur = cur, cur.shift().scale(s) - prev
    return prev, cur


def chebyshev_recurrence(s: int, k: int) -> Polynomial:
    _check(s, k)
    return _recurrence_pair(s, k)[0]


def chebyshev_closed_form(s: int, n: int) -> Polynomial:
    """``T^s_n`` from the binomial sum over ``m <= n`` with ``n - m`` even."""
    _check(s, n)
    if n == 0:
        return Polynomial([1])
    coeffs = [0] * (n + 1)
    for m in range(n % 2, n + 1, 2):
        h, d = (n + m) // 2, (n - m) // 2
        val = binom(h, d) * s**m
        lower = binom(h - 1, d)
        if lower:
            val -= lower * s ** (m - 1)
        coeffs[m] = (-1) ** d * val
    return Polynomial(coeffs)


def classical_chebyshev(k: int) -> Polynomial:
    """First-kind Chebyshev ``T_k`` from ``T_0 = 1, T_1 = X, T_{k+1} = 2X T_k - T_{k-1}``."""
    if k < 0:
        raise ValueError("index must be >= 0")
    a, b = Polynomial([1]), Polynomial([0, 1])
    for _ in range(k):
        a, b = b, b.shift().scale(2) - a
    return a
