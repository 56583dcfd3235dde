"""Command-line interface.

Usage:
    subword-mobius mobius --s 2 --lower a1 --upper c,c --method both
    subword-mobius interval --s 2 --lower e --upper c
    subword-mobius chebyshev --s 3 --k 4
    subword-mobius count-m --s 2 --m 1 --p 1 --n 3 --q 2
    subword-mobius chain-t --s 2 --k 1 --n 2
    subword-mobius verify --s 2 --max-n 4
    subword-mobius table --s 3 --max-n 5

Exit codes: 0 success, 1 invalid input, 2 verification failure or engine
disagreement. Results go to stdout; diagnostics go to stderr. Integers are
written as decimal strings.
"""
from __future__ import annotations

import csv
import json
import sys

import click

from .chebyshev import chebyshev_closed_form, chebyshev_recurrence
from .counting import chain_T_closed, count_M_bruteforce, count_M_recurrence
from .interval import build_interval
from .mobius import mobius_hall, mobius_recursive
from .verify import CHECKS, default_checks, theorem_table, verify_all
from .words import GroundPoset, WordError, parse_word

OK, INVALID, MISMATCH = 0, 1, 2


def _emit(obj: dict) -> None:
    click.echo(json.dumps(obj))


def _poset(s: int) -> GroundPoset:
    try:
        return GroundPoset(s)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--s")


def _word(text: str, s: int, hint: str):
    try:
        return parse_word(text, s)
    except WordError as e:
        raise click.BadParameter(str(e), param_hint=hint)


@click.group()
def cli():
    """Möbius function of the generalized subword order over P_s."""


@cli.command()
@click.option("--s", "s", type=int, required=True)
@click.option("--lower", required=True, help="Word such as a1,c or e for empty.")
@click.option("--upper", required=True)
@click.option("--method", type=click.Choice(["recursive", "hall", "both"]), default="both")
def mobius(s, lower, upper, method):
    """mu(lower, upper)."""
    P = _poset(s)
    u, v = _word(lower, s, "--lower"), _word(upper, s, "--upper")
    iv = build_interval(u, v, P)
    values = []
    if method in ("recursive", "both"):
        values.append(mobius_recursive(u, v, P, iv))
    if method in ("hall", "both"):
        values.append(mobius_hall(u, v, P, iv))
    agree = len(set(values)) == 1
    _emit({"s": str(s), "lower": str(u), "upper": str(v), "mu": str(values[0]), "methods_agree": agree})
    return OK if agree else MISMATCH


@cli.command()
@click.option("--s", "s", type=int, required=True)
@click.option("--lower", required=True)
@click.option("--upper", required=True)
def interval(s, lower, upper):
    """Elements and covering pairs of [lower, upper]."""
    P = _poset(s)
    iv = build_interval(_word(lower, s, "--lower"), _word(upper, s, "--upper"), P)
    _emit(iv.to_dict())
    return OK


@cli.command()
@click.option("--s", "s", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--engine", type=click.Choice(["recurrence", "closed", "both"]), default="both")
def chebyshev(s, k, engine):
    """Coefficients of T^s_k, constant term first."""
    polys = []
    if engine in ("recurrence", "both"):
        polys.append(chebyshev_recurrence(s, k))
    if engine in ("closed", "both"):
        polys.append(chebyshev_closed_form(s, k))
    out = {"s": str(s), "k": str(k), "coefficients": [str(c) for c in polys[0].coefficients]}
    agree = all(p == polys[0] for p in polys)
    if engine == "both":
        out["engines_agree"] = agree
    _emit(out)
    return OK if agree else MISMATCH


@cli.command("count-m")
@click.option("--s", "s", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--p", "p", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--q", "q", type=int, required=True)
@click.option("--engine", type=click.Choice(["brute", "recurrence", "both"]), default="both")
def count_m(s, m, p, n, q, engine):
    """M((m,p),(n,q)): words of type (n,q) above a_1^(m-p) c^p."""
    _poset(s)
    values = []
    if engine in ("brute", "both"):
        values.append(count_M_bruteforce(s, (m, p), (n, q)))
    if engine in ("recurrence", "both"):
        values.append(count_M_recurrence(s, (m, p), (n, q)))
    agree = len(set(values)) == 1
    _emit({"M": str(values[0]), "engines_agree": agree})
    return OK if agree else MISMATCH


@cli.command("chain-t")
@click.option("--s", "s", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
def chain_t(s, k, n):
    """T(k, n), the signed chain count from c^k to c^n through length-n words."""
    _poset(s)
    _emit({"T": str(chain_T_closed(s, k, n))})
    return OK


@cli.command("verify")
@click.option("--s", "s", type=int, required=True)
@click.option("--max-n", "max_n", type=int, default=5, show_default=True)
@click.option("--checks", default=None, help=f"Comma list from: {', '.join(CHECKS)}.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
@click.option("--timings/--no-timings", default=False, help="Include wall time per check.")
def verify_cmd(s, max_n, checks, fmt, timings):
    """Sweep the theorem and its supporting identities; exit 0 iff all pass."""
    _poset(s)
    names = default_checks(s) if checks is None else [c.strip() for c in checks.split(",") if c.strip()]
    report = verify_all(s, max_n, names)
    if fmt == "json":
        click.echo(report.to_json(timings=timings))
    else:
        click.echo(report.to_text())
    return OK if report.passed else MISMATCH


@cli.command()
@click.option("--s", "s", type=int, required=True)
@click.option("--max-n", "max_n", type=int, default=5, show_default=True)
def table(s, max_n):
    """CSV grid of mu(a_1^m, c^n) next to the matching Chebyshev coefficient."""
    _poset(s)
    rows = theorem_table(s, max_n)
    w = csv.writer(sys.stdout, lineterminator="\r\n")
    w.writerow(["m", "n", "mu", "chebyshev_coeff", "match"])
    for m, n, mu, co, match in rows:
        w.writerow([m, n, mu, co, "true" if match else "false"])
    return OK if all(r[-1] for r in rows) else MISMATCH


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="subword-mobius", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return INVALID
    except click.Abort:
        return INVALID
    except ValueError as e:
        click.echo(f"error: {e}", err=True)
        return INVALID
    return rv if isinstance(rv, int) else OK


if __name__ == "__main__":
    sys.exit(main())
