"""Finite sweeps checking Möbius values against Chebyshev coefficients.

Möbius values always come from the interval engines, never from the
polynomial side, so each check compares two independent computations.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .chebyshev import (
    chebyshev_closed_form,
    chebyshev_recurrence,
    classical_chebyshev,
    Polynomial,
    coefficient,
)
from .counting import chain_T_closed
from .mobius import MobiusCache, mobius_recursive
from .words import GroundPoset, Word, _leq

THREADS_ENV = "SUBWORD_MOBIUS_THREADS"


@dataclass
class Failure:
    parameters: dict
    expected: int
    actual: int


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.instances > 0 and not self.failures


@dataclass
class VerificationReport:
    s: int
    max_n: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "s": str(self.s),
            "max_n": str(self.max_n),
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "instances": str(c.instances),
                    "passed": c.passed,
                    "seconds": f"{c.seconds:.6f}",
                    "failures": [
                        {
                            "parameters": {k: str(v) for k, v in f.parameters.items()},
                            "expected": str(f.expected),
                            "actual": str(f.actual),
                        }
                        for f in c.failures
                    ],
                }
                for c in self.checks
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        checks = [
            CheckResult(
                name=c["name"],
                instances=int(c["instances"]),
                seconds=float(c["seconds"]),
                failures=[
                    Failure(
                        {k: int(v) for k, v in f["parameters"].items()},
                        int(f["expected"]),
                        int(f["actual"]),
                    )
                    for f in c["failures"]
                ],
            )
            for c in d["checks"]
        ]
        return cls(int(d["s"]), int(d["max_n"]), checks)

    def to_json(self, timings: bool = True) -> str:
        d = self.to_dict()
        if not timings:
            for c in d["checks"]:
                del c["seconds"]
        return json.dumps(d, indent=2)

    def to_text(self) -> str:
        lines = [f"s={self.s} max_n={self.max_n}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status} {c.name}: {c.instances} instances, {len(c.failures)} failures")
            for f in c.failures[:10]:
                lines.append(f"    {f.parameters}: expected {f.expected}, got {f.actual}")
        lines.append("PASSED" if self.passed else "FAILED")
        return "\n".join(lines)


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


class _Sweep:
    """Shared state for one (s, max_n) run: a Möbius cache and polynomial lookups."""

    def __init__(self, s: int, max_n: int, workers: Optional[int] = None):
        if s < 1 or max_n < 1:
            raise ValueError("need s >= 1 and max_n >= 1")
        self.s, self.max_n = s, max_n
        self.P = GroundPoset(s)
        self.cache = MobiusCache(self.P)
        self.workers = default_workers() if workers is None else workers

    def prefetch(self) -> None:
        """Compute mu(a_1^m, c^n) and mu(c^m, c^n) for the whole sweep, possibly in parallel."""
        pairs = [
            (w, Word.c(n))
            for n in range(self.max_n + 1)
            for m in range(n + 1)
            for w in (Word.a(1, m), Word.c(m))
        ]
        pairs = list(dict.fromkeys(pairs))
        if self.workers > 1 and len(pairs) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                values = list(pool.map(_mu_task, [(self.s, u, v) for u, v in pairs]))
        else:
            values = [_mu_task((self.s, u, v)) for u, v in pairs]
        for (u, v), val in zip(pairs, values):
            self.cache.prime(u, v, val)

    def mu(self, u, v) -> int:
        """mu(u, v), or 0 when u is not below v."""
        if not _leq(u, v):
            return 0
        return self.cache.mu(u, v)

    def a(self, m: int, n: int) -> int:
        return self.mu(Word.a(1, m), Word.c(n))

    def c(self, m: int, n: int) -> int:
        return self.mu(Word.c(m), Word.c(n))

    def T(self, k: int) -> Polynomial:
        return chebyshev_recurrence(self.s, k)


def _mu_task(args) -> int:
    s, u, v = args
    return mobius_recursive(u, v, GroundPoset(s))


def _run(name: str, body: Callable[[Callable], None]) -> CheckResult:
    res = CheckResult(name)
    t0 = time.perf_counter()

    def check(params: dict, expected: int, actual: int) -> None:
        res.instances += 1
        if expected != actual:
            res.failures.append(Failure(params, expected, actual))

    body(check)
    res.seconds = time.perf_counter() - t0
    return res


def verify_main_theorem(sw: _Sweep) -> CheckResult:
    """mu(a_1^m, c^n) equals the X^(n-m) coefficient of T^s_{m+n}."""

    def body(check):
        for n in range(sw.max_n + 1):
            for m in range(n + 1):
                check({"m": m, "n": n}, coefficient(sw.T(m + n), n - m), sw.a(m, n))

    return _run("main_theorem", body)


def verify_chebyshev_engines(sw: _Sweep) -> CheckResult:
    """Recurrence and closed form agree coefficientwise for every degree the sweep uses."""

    def body(check):
        for k in range(2 * sw.max_n + 1):
            rec, closed = chebyshev_recurrence(sw.s, k), chebyshev_closed_form(sw.s, k)
            for d in range(k + 1):
                check({"k": k, "degree": d}, coefficient(rec, d), coefficient(closed, d))

    return _run("chebyshev_engines", body)


def verify_conjecture(sw: _Sweep) -> CheckResult:
    """s = 2: mu(a^i, c^j) is the X^(j-i) coefficient of the classical T_{i+j}."""
    if sw.s != 2:
        raise ValueError("the classical-Chebyshev check applies to s = 2 only")

    def body(check):
        for j in range(sw.max_n + 1):
            for i in range(j + 1):
                check({"i": i, "j": j}, coefficient(classical_chebyshev(i + j), j - i), sw.a(i, j))

    return _run("conjecture", body)


def verify_empty_word(sw: _Sweep) -> CheckResult:
    """mu(e, c^n) = s^(n-1) (s-1) = [X^n] T^s_n."""

    def body(check):
        s = sw.s
        for n in range(1, sw.max_n + 1):
            mu = sw.a(0, n)
            check({"n": n, "form": 0}, s ** (n - 1) * (s - 1), mu)
            check({"n": n, "form": 1}, coefficient(sw.T(n), n), mu)

    return _run("empty_word", body)


def verify_relation(sw: _Sweep) -> CheckResult:
    """mu(c^m, c^n) - mu(c^(m-1), c^(n-1)) = s mu(c^m, c^(n-1)) for 1 <= m < n."""

    def body(check):
        for n in range(2, sw.max_n + 1):
            for m in range(1, n):
                check({"m": m, "n": n}, sw.s * sw.c(m, n - 1), sw.c(m, n) - sw.c(m - 1, n - 1))

    return _run("relation", body)


def verify_relation2(sw: _Sweep) -> CheckResult:
    """mu(a^m, c^n) + mu(a^(m-1), c^(n-1)) = s mu(a^m, c^(n-1)) for 1 <= m <= n."""

    def body(check):
        for n in range(1, sw.max_n + 1):
            for m in range(1, n + 1):
                check({"m": m, "n": n}, sw.s * sw.a(m, n - 1), sw.a(m, n) + sw.a(m - 1, n - 1))

    return _run("relation2", body)


def verify_c_eq(sw: _Sweep) -> CheckResult:
    """mu(c^m, c^n) = sum_{k=m}^{n-1} mu(c^m, c^k) T(k, n) for 1 <= m < n."""

    def body(check):
        for n in range(2, sw.max_n + 1):
            for m in range(1, n):
                rhs = sum(sw.c(m, k) * chain_T_closed(sw.s, k, n) for k in range(m, n))
                check({"m": m, "n": n}, rhs, sw.c(m, n))

    return _run("c_eq", body)


def verify_reduction(sw: _Sweep) -> CheckResult:
    """mu(a_1^m, c^n) = (-1)^m mu(c^m, c^n)."""

    def body(check):
        for n in range(sw.max_n + 1):
            for m in range(n + 1):
                check({"m": m, "n": n}, (-1) ** m * sw.c(m, n), sw.a(m, n))

    return _run("reduction", body)


def verify_recurrences(sw: _Sweep) -> list[CheckResult]:
    return [verify_relation(sw), verify_relation2(sw), verify_c_eq(sw)]


CHECKS = {
    "main_theorem": verify_main_theorem,
    "chebyshev_engines": verify_chebyshev_engines,
    "conjecture": verify_conjecture,
    "empty_word": verify_empty_word,
    "relation": verify_relation,
    "relation2": verify_relation2,
    "c_eq": verify_c_eq,
    "reduction": verify_reduction,
}


def default_checks(s: int) -> list[str]:
    return [name for name in CHECKS if name != "conjecture" or s == 2]


def verify_all(
    s: int,
    max_n: int = 5,
    checks: Optional[list[str]] = None,
    workers: Optional[int] = None,
) -> VerificationReport:
    names = default_checks(s) if checks is None else list(checks)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    sw = _Sweep(s, max_n, workers)
    sw.prefetch()
    return VerificationReport(s, max_n, [CHECKS[n](sw) for n in names])


def theorem_table(s: int, max_n: int, workers: Optional[int] = None) -> list[tuple]:
    """Rows ``(m, n, mu(a_1^m, c^n), [X^(n-m)] T^s_{m+n}, match)``."""
    sw = _Sweep(s, max_n, workers)
    sw.prefetch()
    rows = []
    for n in range(max_n + 1):
        for m in range(n + 1):
            mu = sw.a(m, n)
            co = coefficient(sw.T(m + n), n - m)
            rows.append((m, n, mu, co, mu == co))
    return rows
