"""Command-line interface: rank, check, table, compare.

Exit codes: 0 ok, 1 input error, 2 infeasible solution, 3 singular system,
4 solvability not guaranteed (check only).
"""

import sys

import click

from .errors import DomainError, HreError, InputError, ValidationError
from .io import load_matrix_file
from .jsonfmt import dumps_canonical
from .report import build_check_report, build_compare_report, build_rank_report
from .solvability import render_bound_table

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2
EXIT_SINGULAR = 3
EXIT_NOT_GUARANTEED = 4

_ERROR_EXIT = {"infeasible": EXIT_INFEASIBLE, "singular": EXIT_SINGULAR}


def _load(matrix_file, known, tolerance):
    try:
        return load_matrix_file(matrix_file, known_path=known,
                                reciprocity_tolerance=tolerance)
    except (InputError, ValidationError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


def _fmt(x, decimals=4):
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        return f"{x:.{decimals}f}"
    return str(x)


def _print_rank_report(report):
    click.echo(f"concepts: n={report['n']}  unknown k={report['k']}  "
               f"known r={report['r']}")
    click.echo(f"inconsistency K(M)={_fmt(report['kappa'])}  "
               f"K(minor)={_fmt(report['kappa_minor'])}  "
               f"bound={_fmt(report['bound'])}  "
               f"guaranteed={_fmt(report['guaranteed'])}")
    triad = report["worst_triad"]
    if triad is not None:
        i, j, k = triad["labels"]
        click.echo(f"worst triad: ({i}, {j} | middle {k})  "
                   f"kappa={_fmt(triad['kappa'])}")
    if report["error"] is not None:
        click.echo(f"error: {report['error']['kind']}: "
                   f"{report['error']['detail']}", err=True)
        return
    click.echo("ranking:")
    width = max(len(lab) for lab in report["labels"])
    for lab in report["labels"]:
        marker = " (known)" if lab in report["known"] else ""
        click.echo(f"  {lab.ljust(width)}  {_fmt(report['ranking'][lab])}{marker}")
    diag = report["diagnostics"]
    click.echo(f"residual={diag['residual']:.3e}  "
               f"condition={diag['condition_estimate']:.3e}")


@click.group()
def main():
    """Heuristic Rating Estimation ranking over pairwise comparison matrices."""


@main.command()
@click.argument("matrix_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@click.option("--known", type=click.Path(), default=None,
              help="Known values from a separate file (JSON map or CSV).")
@click.option("--tolerance", type=float, default=1e-9,
              help="Reciprocity tolerance for matrix validation.")
def rank(matrix_file, as_json, known, tolerance):
    """Solve the HRE system and print the ranking report."""
    M, p = _load(matrix_file, known, tolerance)
    try:
        report = build_rank_report(M, p)
    except (DomainError, HreError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    if as_json:
        click.echo(dumps_canonical(report))
    else:
        _print_rank_report(report)
    if report["error"] is not None:
        sys.exit(_ERROR_EXIT[report["error"]["kind"]])


@main.command()
@click.argument("matrix_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Emit the certificate as JSON.")
@click.option("--known", type=click.Path(), default=None)
@click.option("--tolerance", type=float, default=1e-9)
def check(matrix_file, as_json, known, tolerance):
    """Certify solvability: inconsistency vs bound plus M-matrix evidence."""
    M, p = _load(matrix_file, known, tolerance)
    try:
        report = build_check_report(M, p)
    except (DomainError, HreError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    if as_json:
        click.echo(dumps_canonical(report))
    else:
        click.echo(f"n={report['n']}  r={report['r']}  k={report['k']}")
        click.echo(f"K(M)      = {_fmt(report['kappa'])}")
        click.echo(f"K(minor)  = {_fmt(report['kappa_minor'])}")
        click.echo(f"bound     = {_fmt(report['bound'])}"
                   + ("  (scalar case, trivially solvable)"
                      if report["scalar_case"] else ""))
        click.echo(f"guaranteed: {_fmt(report['guaranteed'])}")
        ev = report["m_matrix_evidence"]
        click.echo(f"M-matrix evidence: is_m_matrix={_fmt(ev['is_m_matrix'])}  "
                   f"in_z_class={_fmt(ev['in_z_class'])}  "
                   f"inverse_nonnegative={_fmt(ev['inverse_nonnegative'])}")
        click.echo(f"  s={_fmt(ev['s'])}  spectral_radius={_fmt(ev['spectral_radius'])}")
        triad = report["worst_triad"]
        if triad is not None:
            i, j, k = triad["labels"]
            click.echo(f"worst triad: ({i}, {j} | middle {k})  "
                       f"kappa={_fmt(triad['kappa'])}")
    if not report["guaranteed"]:
        sys.exit(EXIT_NOT_GUARANTEED)


@main.command()
@click.argument("n_max", type=int)
@click.option("--csv", "as_csv", is_flag=True, help="Emit CSV instead of text.")
def table(n_max, as_csv):
    """Print the solvability bound table for n up to N_MAX."""
    try:
        click.echo(render_bound_table(n_max, csv=as_csv), nl=False)
    except DomainError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


@main.command()
@click.argument("matrix_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Emit the comparison as JSON.")
@click.option("--known", type=click.Path(), default=None)
@click.option("--tolerance", type=float, default=1e-9)
def compare(matrix_file, as_json, known, tolerance):
    """Rank with both HRE and the eigenvector baseline, side by side."""
    M, p = _load(matrix_file, known, tolerance)
    try:
        report = build_compare_report(M, p)
    except (DomainError, HreError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    if as_json:
        click.echo(dumps_canonical(report))
    else:
        width = max(len(lab) for lab in report["labels"])
        click.echo(f"{'concept'.ljust(width)}  {'HRE':>10}  {'eigenvector':>12}")
        for lab in report["labels"]:
            hre_val = (_fmt(report["hre"][lab]) if report.get("hre") else
                       report["hre_error"]["kind"])
            click.echo(f"{lab.ljust(width)}  {hre_val:>10}  "
                       f"{_fmt(report['eigenvector'][lab]):>12}")
        if report["comparison"] is not None:
            click.echo(f"kendall tau = {_fmt(report['comparison']['kendall_tau'])}")
        click.echo(f"dominant eigenvalue = {_fmt(report['dominant_eigenvalue'])}")
    if report["hre_error"] is not None:
        sys.exit(_ERROR_EXIT[report["hre_error"]["kind"]])


if __name__ == "__main__":
    main()
