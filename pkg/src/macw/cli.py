"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (bad input, violated
precondition), 2 on a usage error. Every option can also be set through a
``MACW_<COMMAND>_<OPTION>`` environment variable; flags take precedence.
"""

from __future__ import annotations

import functools
import json
import os
import sys
from pathlib import Path

import click

from . import formats
from .core import MACWError, WeightGraph, parse_problem, render
from .cycles import BRUTEFORCE_CAP, TABLE_CAP, macw_bruteforce, macw_karp
from .explore import GapSearchConfig, generate_instance, generate_offset, search_gap, summarize
from .solve import EXACT_CAP, LocalSearchParams, solve_exact, solve_local_search, solve_zero_offset
from .tables import reproduce_table, to_csv, to_markdown

DEFAULT_THREADS = os.cpu_count() or 1


def _int_range(ctx, param, value):
    if value is None or isinstance(value, tuple):
        return value
    try:
        lo, hi = (int(x) for x in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected LO,HI integers, got {value!r}") from None
    return lo, hi


def _read(path: str) -> str:
    return Path(path).read_text()


def _domain_errors(fn):
    """Turn MACWError into exit status 1 with the message on stderr."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except MACWError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


@click.group(context_settings={"auto_envvar_prefix": "MACW", "help_option_names": ["-h", "--help"]})
def cli():
    """Min Max Average Cycle Weight allocation solvers."""


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False),
              help="Instance JSON file (values, optional offset).")
@click.option("--method", type=click.Choice(["matching", "exact", "local"]), default="exact",
              show_default=True)
@click.option("--max-iters", type=int, default=LocalSearchParams.max_iters, show_default=True)
@click.option("--restarts", type=int, default=LocalSearchParams.restarts, show_default=True)
@click.option("--seed", type=int, default=LocalSearchParams.seed, show_default=True)
@click.option("--cap", type=int, default=EXACT_CAP, show_default=True, help="Largest n for --method exact.")
@click.option("--threads", type=int, default=DEFAULT_THREADS, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print the solution as JSON.")
@_domain_errors
def solve(input_path, method, max_iters, restarts, seed, cap, threads, as_json):
    """Find an allocation minimizing the MACW of the (offset) envy graph."""
    inst, offset = parse_problem(_read(input_path))
    if method == "matching":
        if not offset.is_zero():
            raise MACWError("method 'matching' requires an all-zero offset; use --method exact or local")
        sol = solve_zero_offset(inst)
    elif method == "exact":
        sol = solve_exact(inst, offset, cap=cap, workers=threads)
    else:
        sol = solve_local_search(inst, offset, LocalSearchParams(max_iters, restarts, seed))
    if as_json:
        click.echo(json.dumps(formats.solution_dict(sol), indent=2))
    else:
        click.echo(formats.solution_text(sol), nl=False)


@cli.command("macw")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True, dir_okay=False),
              help='Graph JSON file: {"weights": [[...]]}.')
@click.option("--method", type=click.Choice(["karp", "bruteforce"]), default="karp", show_default=True)
@click.option("--cap", type=int, default=BRUTEFORCE_CAP, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@_domain_errors
def macw_cmd(graph_path, method, cap, as_json):
    """Maximum average cycle weight of a complete digraph."""
    g = formats.parse_graph(_read(graph_path))
    mu, witness = macw_karp(g) if method == "karp" else macw_bruteforce(g, cap)
    if as_json:
        click.echo(json.dumps({"macw": render(mu), "witness": list(witness.nodes),
                               "witness_total": render(witness.total_weight)}))
    else:
        click.echo(f"macw: {render(mu)}\nwitness: {witness.label()} total {render(witness.total_weight)}")


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["md", "csv"]), default="md", show_default=True)
@click.option("--no-offset", is_flag=True, help="Ignore the offset graph in the input file.")
@click.option("--cap", type=int, default=TABLE_CAP, show_default=True)
@_domain_errors
def table(input_path, fmt, no_offset, cap):
    """Average weight of every cycle under every allocation; row maxima marked."""
    inst, offset = parse_problem(_read(input_path))
    t = reproduce_table(inst, None if no_offset else offset, cap=cap)
    click.echo(to_markdown(t) if fmt == "md" else to_csv(t), nl=False)


@cli.command()
@click.option("--n", "n", type=int, default=4, show_default=True)
@click.option("--count", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--value-range", default="1,9", show_default=True, callback=_int_range)
@click.option("--weight-range", default="-3,3", show_default=True, callback=_int_range)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Report file; .json writes JSON, anything else CSV.")
@click.option("--threads", type=int, default=DEFAULT_THREADS, show_default=True)
@_domain_errors
def search(n, count, seed, value_range, weight_range, out, threads):
    """Compare offset optima with max-value matchings on random instances."""
    config = GapSearchConfig(n, count, seed, value_range, weight_range)
    reports = search_gap(config, workers=threads)
    summary = summarize(reports)
    if out:
        text = (formats.reports_json(reports, summary) if out.endswith(".json")
                else formats.reports_csv(reports))
        Path(out).write_text(text)
    click.echo(
        f"pairs: {summary['pairs']}\n"
        f"positive gaps: {summary['positive_gaps']} ({summary['positive_rate']:.1%})\n"
        f"max gap: {render(summary['max_gap'])}\n"
        f"mean gap: {render(summary['mean_gap'])}\n"
        f"min gap: {render(summary['min_gap'])}"
    )


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--value-range", default="1,9", show_default=True, callback=_int_range)
@click.option("--weight-range", default=None, callback=_int_range,
              help="Also emit a random offset graph with weights in LO,HI.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_domain_errors
def gen(n, seed, value_range, weight_range, out):
    """Emit a random instance file."""
    inst = generate_instance(n, seed, value_range)
    offset: WeightGraph | None = None
    if weight_range is not None:
        offset = generate_offset(n, seed + 1, weight_range)
    text = formats.dump_problem(inst, offset)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def main(argv: list[str] | None = None) -> None:
    cli.main(args=argv, prog_name="macw")


if __name__ == "__main__":
    main()
