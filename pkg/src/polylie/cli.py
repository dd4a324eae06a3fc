"""Command-line front end: run fixtures, degenerate combinations onto
curves, expand quadrangular combinations, print symbols and symmetry
orbits, and exchange term lists as plain text."""

from __future__ import annotations

import sys

import click

from . import harness
from .coalgebra import rho_project, symbol
from .field import Poly, format_poly, format_ratfunc, rf
from .identities import IDENTITY_TABLES
from .quadrangular import q_tilde, qli
from .specialise import degenerate, parse_curve
from .terms import LinComb, LiTerm, format_term, parse_term


def _signed(coeff) -> str:
    s = str(coeff)
    return s if s.startswith("-") else f"+{s}"


@click.group()
def main():
    """Exact symbolic calculator for multiple polylogarithms."""


@main.command("verify")
@click.argument("fixture", default="all")
@click.option("--long", "long_", is_flag=True,
              help="Include long-running fixtures.")
@click.option("--list", "list_", is_flag=True,
              help="List fixture names and exit.")
def verify_cmd(fixture, long_, list_):
    """Run one named fixture, or every registered one."""
    if list_:
        for name, fx in sorted(harness.FIXTURES.items()):
            click.echo(f"{name:{24}} [{fx.cost}] {fx.summary}")
        return
    if fixture == "all":
        reports = harness.run_all(long=long_)
    elif fixture in harness.FIXTURES:
        reports = [harness.run_fixture(fixture)]
    else:
        raise click.ClickException(
            f"unknown fixture {fixture!r} (try 'verify --list')")
    failed = 0
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        failed += not rep.passed
        click.echo(f"{status} {rep.name} ({rep.seconds:.1f}s)")
        if not rep.passed:
            for key, val in rep.detail.items():
                click.echo(f"     {key}: {val}")
    click.echo(f"{len(reports) - failed}/{len(reports)} fixtures passed")
    sys.exit(1 if failed else 0)


@main.command("degenerate")
@click.option("--curve", required=True,
              help="Curve description, e.g. '17 u_p 246 u_q 35'.")
@click.option("--weight", type=click.Choice(["4", "6"]), default="4",
              show_default=True)
@click.option("--policy", default="none", show_default=True,
              help="Survivor filter; comma-separate to compose, e.g. "
                   "'two_ones,one_var'.")
@click.option("--all-depths", is_flag=True,
              help="Print lower-depth terms as well.")
def degenerate_cmd(curve, weight, policy, all_depths):
    """Degenerate the functional-equation combination onto a stable curve."""
    k = int(weight) // 2
    pol = tuple(policy.split(",")) if "," in policy else policy
    try:
        cv = parse_curve(curve)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    points = tuple(str(i) for i in range(1, 2 * k + 4))
    comb = degenerate(q_tilde(k, points), cv, policy=pol)
    if not all_depths:
        comb = comb.filter(lambda t: len(t.indices) == k)
    rows = sorted(((format_term(t), c) for t, c in comb.items()))
    for text, coeff in rows:
        click.echo(f"{_signed(coeff)} {text}")
    click.echo(f"# {len(rows)} terms")


@main.command("expand")
@click.argument("what", type=click.Choice(["qli"]))
@click.option("--points", type=int, default=6, show_default=True,
              help="Number of marked points (even, >= 4).")
@click.option("--weight", type=int, default=3, show_default=True)
def expand_cmd(what, points, weight):
    """Expand a quadrangular combination into correlators."""
    if points < 4 or points % 2:
        raise click.ClickException("--points must be even and >= 4")
    n = points // 2 - 1
    k = weight - n
    if k < 1:
        raise click.ClickException(
            f"weight must exceed {n} for {points} points")
    vals = tuple(rf(f"x{i}") for i in range(1, points + 1))
    comb = qli(n, k, vals)
    for t, coeff in sorted(comb.items(), key=lambda tc: format_term(tc[0])):
        click.echo(f"{_signed(coeff)} {format_term(t)}")
    click.echo(f"# {len(comb)} correlators")


@main.command("symbol")
@click.argument("expr")
@click.option("--rho", is_flag=True,
              help="Project each tensor word onto its Lie part.")
def symbol_cmd(expr, rho):
    """Print the symbol of a term, e.g. 'Li[{2,1,1},{x,y}]'."""
    try:
        term = parse_term(expr)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    s = symbol(LinComb.term(term))
    if rho:
        s = rho_project(s)

    def fmt(letter):
        return (format_poly(letter) if isinstance(letter, Poly)
                else format_ratfunc(letter))

    rows = sorted(((tuple(fmt(p) for p in word), c) for word, c in s.items()))
    for word, coeff in rows:
        click.echo(f"{_signed(coeff)} " + " (x) ".join(word))
    click.echo(f"# {len(rows)} tensor words")


@main.command("orbit")
@click.option("--weight", type=click.Choice(["4", "6"]), default="6",
              show_default=True)
@click.option("--extended", is_flag=True,
              help="Add the last-slot reflection generator.")
def orbit_cmd(weight, extended):
    """Print the closure of the argument-symmetry generators."""
    elements = harness.symmetry_orbit(int(weight), extended=extended)
    for e in elements:
        click.echo(harness.describe_element(e))
    click.echo(f"# {len(elements)} substitutions")


@main.command("export")
@click.argument("path", type=click.Path(writable=True, dir_okay=False))
@click.option("--identity", "table", required=True,
              help="Name from the reduction catalogue.")
def export_cmd(path, table):
    """Write a catalogued reduction as a plain-text term list."""
    if table not in IDENTITY_TABLES:
        known = ", ".join(sorted(IDENTITY_TABLES))
        raise click.ClickException(f"unknown identity {table!r} (known: {known})")
    comb = harness.identity_comb(table)
    harness.export_term_list(path, table, comb)
    click.echo(f"wrote {len(comb)} terms to {path}")


@main.command("import")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
def import_cmd(path):
    """Parse a plain-text term list and report its contents."""
    try:
        name, comb = harness.import_term_list(path)
    except harness.TermListFormatError as exc:
        raise click.ClickException(
            f"{path}: line {exc.line}, column {exc.column}: {exc.reason}")
    weights = sorted({t.n0 + sum(t.indices) if isinstance(t, LiTerm)
                      else len(t.points) - 1
                      for t in comb.terms()})
    click.echo(f"{name}: {len(comb)} terms, weights {weights}")


if __name__ == "__main__":
    main()
