"""Command line surface: tables, spectra, irreps, structure, verification.

Output formats: text (human), json (machine, round-trips), csv (flat).
The oracle size cap defaults to d^n <= 4096 and can be overridden with
--cap or the PTALGEBRA_CAP environment variable.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from math import factorial

import click
import numpy as np

from .algebra import AlgebraContext, mul_generators
from .checks import SUITES, run_suite
from .dpoly import DPoly
from .induced import spectral_q
from .irreps import irrep_M_e, irrep_M_f, irrep_S, n2_special_case, structure_report
from .oracle import CAP_ENV_VAR
from .partitions import Partition
from .permutations import Permutation


def _perm_label(perm: Permutation) -> str:
    if perm.is_identity():
        return "1"
    name = perm.cycle_string()
    return name if perm.fixes_last() else name + "^t"


def _cell_text(coeff, perm: Permutation) -> str:
    """Render a table cell like ``d(23)^t`` or ``2(13)^t`` or ``1``."""
    if isinstance(coeff, DPoly):
        coeff_str = str(coeff)
        trivial = coeff_str == "1"
        if not trivial and ("+" in coeff_str[1:] or "-" in coeff_str[1:]):
            coeff_str = f"({coeff_str})"
    else:
        trivial = coeff == 1
        coeff_str = f"{coeff:g}"
    if perm.is_identity():
        return coeff_str
    return ("" if trivial else coeff_str) + _perm_label(perm)


def build_mul_table(n: int, d: int | None) -> dict:
    """The full generator product table as a JSON-ready record."""
    ctx = AlgebraContext(n, d)
    perms = sorted(Permutation.all(n))
    entries = []
    for sigma in perms:
        row = []
        for rho in perms:
            power, result = mul_generators(sigma, rho)
            coeff = ctx.d_power(power)
            row.append({
                "coeff": list(coeff.coeffs) if isinstance(coeff, DPoly) else coeff,
                "perm": result.one_line_string(),
            })
        entries.append(row)
    return {
        "n": n,
        "d": "symbolic" if d is None else d,
        "order": [p.one_line_string() for p in perms],
        "entries": entries,
    }


def _table_cells(table: dict) -> tuple[list[Permutation], list[list[str]]]:
    perms = [Permutation.parse(s) for s in table["order"]]
    symbolic = table["d"] == "symbolic"
    cells = []
    for row in table["entries"]:
        rendered = []
        for cell in row:
            coeff = DPoly(cell["coeff"]) if symbolic else cell["coeff"]
            rendered.append(_cell_text(coeff, Permutation.parse(cell["perm"])))
        cells.append(rendered)
    return perms, cells


def _print_grid(headers: list[str], rows: list[list[str]]):
    widths = [max(len(headers[c]), max(len(r[c]) for r in rows))
              for c in range(len(headers))]
    click.echo("  ".join(h.rjust(w) for h, w in zip(headers, widths)))
    for row in rows:
        click.echo("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))


def _emit_csv(headers: list[str], rows: list[list[str]]):
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(headers)
    writer.writerows(rows)
    click.echo(buffer.getvalue().rstrip("\n"))


format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json", "csv"]),
    default="text", show_default=True, help="Output format.")
cap_option = click.option(
    "--cap", type=int, default=None,
    help=f"Oracle size cap on d^n (default 4096 or ${CAP_ENV_VAR}).")


@click.group()
def main():
    """Algebra of permutation operators transposed on the last tensor factor."""


@main.command("mul-table")
@click.option("--n", type=int, required=True, help="Number of tensor factors.")
@click.option("--d", type=int, default=None, help="Local dimension (numeric).")
@click.option("--symbolic", is_flag=True, help="Keep d as an indeterminate.")
@format_option
def cmd_mul_table(n: int, d: int | None, symbolic: bool, fmt: str):
    """Print the n! x n! generator multiplication table."""
    if symbolic and d is not None:
        raise click.UsageError("--symbolic and --d are mutually exclusive")
    if not symbolic and d is None:
        raise click.UsageError("pass --d or --symbolic")
    if factorial(n) > 720:
        raise click.UsageError(
            "table would exceed 720x720; restrict n or query products directly")
    table = build_mul_table(n, None if symbolic else d)
    if fmt == "json":
        click.echo(json.dumps(table))
        return
    perms, cells = _table_cells(table)
    labels = [_perm_label(p) for p in perms]
    rows = [[labels[i]] + cells[i] for i in range(len(perms))]
    if fmt == "csv":
        _emit_csv(["*"] + labels, rows)
    else:
        _print_grid(["*"] + labels, rows)


@main.command("spectrum")
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--alpha", type=str, required=True,
              help="Partition of n-2, e.g. '2,1'.")
@format_option
def cmd_spectrum(n: int, d: int, alpha: str, fmt: str):
    """Q(alpha): matrix, closed-form eigenvalues, rank, vanishing label."""
    record = spectral_q(Partition.parse(alpha), d, n).to_dict()
    if fmt == "json":
        click.echo(json.dumps(record))
        return
    rows = [[str(e["nu"]), f"{e['lambda']:g}", str(e["multiplicity"])]
            for e in record["eigenpairs"]]
    if fmt == "csv":
        _emit_csv(["nu", "lambda", "multiplicity"], rows)
        return
    size = int(round(len(record["matrix"]) ** 0.5))
    click.echo(f"Q(alpha={record['alpha']}) at n={n}, d={d}:")
    matrix = np.array(record["matrix"]).reshape(size, size)
    for row in matrix:
        click.echo("  " + "  ".join(f"{x:g}" for x in row))
    _print_grid(["nu", "lambda", "mult"], rows)
    click.echo(f"rank {record['rank']}"
               + (f", vanishing block {record['theta']}" if record["theta"] else ""))


@main.command("irrep")
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--kind", type=click.Choice(["m", "s"]), required=True)
@click.option("--alpha", type=str, default=None, help="Kind-M label (of n-2).")
@click.option("--nu", type=str, default=None, help="Kind-S label (of n-1).")
@click.option("--basis", type=click.Choice(["f", "e"]), default="f",
              show_default=True, help="Kind-M basis.")
@format_option
def cmd_irrep(n: int, d: int, kind: str, alpha: str | None, nu: str | None,
              basis: str, fmt: str):
    """Serialize one irreducible representation of the algebra."""
    if factorial(n) > 720:
        raise click.UsageError("n too large to list all generator images")
    if n == 2:
        _report, irreps = n2_special_case(d)
        rep = irreps[0 if kind == "m" else 1]
    elif kind == "m":
        if alpha is None:
            raise click.UsageError("kind m needs --alpha")
        label = Partition.parse(alpha)
        rep = irrep_M_f(label, d, n) if basis == "f" else irrep_M_e(label, d, n)
    else:
        if nu is None:
            raise click.UsageError("kind s needs --nu")
        rep = irrep_S(Partition.parse(nu), d, n)
    record = rep.to_dict()
    if fmt == "json":
        click.echo(json.dumps(record))
        return
    if fmt == "csv":
        rows = [[name] + [f"{x:g}" for x in flat]
                for name, flat in record["images"].items()]
        _emit_csv(["generator"] + [f"m{k}" for k in range(rep.dimension**2)], rows)
        return
    click.echo(f"kind {record['kind']}, label {record['label']}, "
               f"dim {record['dimension']}, basis {record['basis_tag']}")
    for name, flat in record["images"].items():
        mat = np.array(flat).reshape(rep.dimension, rep.dimension)
        click.echo(f"W({name}):")
        for row in mat:
            click.echo("  " + "  ".join(f"{x:g}" for x in row))


@main.command("structure")
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--oracle", is_flag=True,
              help="Also measure the span dimension on (C^d)^n.")
@cap_option
@format_option
def cmd_structure(n: int, d: int, oracle: bool, cap: int | None, fmt: str):
    """Block structure: kind-M ranks, kind-S dimensions, total dimension."""
    report = structure_report(n, d, with_oracle=oracle, cap=cap)
    record = report.to_dict()
    if fmt == "json":
        click.echo(json.dumps(record))
        return
    rows = ([["M", e["alpha"], str(e["rank"])] for e in record["m_blocks"]]
            + [["S", e["nu"], str(e["dim"])] for e in record["s_blocks"]])
    if fmt == "csv":
        _emit_csv(["kind", "label", "size"], rows)
        return
    _print_grid(["kind", "label", "size"], rows)
    click.echo(f"dim M = {record['dim_M']}, dim S = {record['dim_S']}, "
               f"total = {record['dim_total']}"
               + (f", oracle = {record['oracle_dim']}" if oracle else ""))


@main.command("verify")
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--suite", type=click.Choice(list(SUITES)), default="all",
              show_default=True)
@click.option("--tol", type=float, default=None,
              help="Override the pass threshold on residuals.")
@cap_option
@format_option
def cmd_verify(n: int, d: int, suite: str, tol: float | None,
               cap: int | None, fmt: str):
    """Run verification suites; exit code counts the failures."""
    if tol is not None and tol <= 0:
        raise click.UsageError("--tol must be positive")
    reports = run_suite(n, d, suite, cap)
    if tol is not None:
        for report in reports:
            report.passed = report.max_residual < tol
    failures = sum(not r.passed for r in reports)
    if fmt == "json":
        click.echo(json.dumps([r.to_dict() for r in reports]))
    elif fmt == "csv":
        _emit_csv(["check", "passed", "max_residual", "details"],
                  [[r.check, str(r.passed), f"{r.max_residual:.3e}", r.details]
                   for r in reports])
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            click.echo(f"[{status}] {r.check} {r.params} "
                       f"residual {r.max_residual:.3e}"
                       + (f" ({r.details})" if r.details else ""))
        click.echo(f"{len(reports) - failures}/{len(reports)} checks passed")
    sys.exit(failures)


if __name__ == "__main__":
    main()
