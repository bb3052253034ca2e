"""Command line interface: ``zap``.

Every command reads one graph document (a path, or ``-`` for stdin) and
writes one JSON document (stdout by default, ``-o`` for a file). Output is
compact and byte-for-byte deterministic unless ``--pretty`` is given.

Exit codes:
    0  success (valid graph, no obstruction found)
    1  invalid graph or invalid parameters
    2  ``check`` found an obstruction
    3  the input could not be read or parsed
"""

import json
from pathlib import Path
from typing import Callable, Optional

import typer
from pydantic import BaseModel
from rich.console import Console

from zappatic import __version__
from zappatic.config import get_settings
from zappatic.core.exceptions import ZappaticError
from zappatic.families import (
    abelian_grid,
    chain_planes,
    cycle_planes,
    fork_planes,
    nonsmoothable_example,
    pillow,
    quadric_chain,
    quadrics_and_plane,
    random_planar_config,
    star_obstruction,
    veronese_mt,
)
from zappatic.graph import GraphLoadError, ZappaticGraph, load, prepare, serialize, validate
from zappatic.homology import homology_report
from zappatic.invariants import full_report
from zappatic.logging_config import bind_contextvars, clear_contextvars, configure_logging, get_logger
from zappatic.obstructions import VerdictStatus, check

EXIT_INVALID = 1
EXIT_OBSTRUCTED = 2
EXIT_UNREADABLE = 3

logger = get_logger(__name__)

app = typer.Typer(
    name="zap",
    help="Invariants and smoothability obstructions of Zappatic surfaces.",
    no_args_is_help=True,
    add_completion=False,
)
generate_app = typer.Typer(help="Write the canonical graph of a known configuration.", no_args_is_help=True)
app.add_typer(generate_app, name="generate")

SOURCE = typer.Argument(..., help="Graph document, or - for stdin.")
OUTPUT = typer.Option("-", "--output", "-o", help="Output file, or - for stdout.")
PRETTY = typer.Option(False, "--pretty", help="Indented, highlighted JSON.")


@app.callback()
def main(ctx: typer.Context) -> None:
    configure_logging(get_settings())
    clear_contextvars()
    bind_contextvars(command=ctx.invoked_subcommand)


# =============================================================================
# I/O
# =============================================================================

def _fail(code: int, message: str) -> typer.Exit:
    typer.echo(f"zap: {message}", err=True)
    return typer.Exit(code=code)


def _read(source: str) -> ZappaticGraph:
    try:
        if source == "-":
            text = typer.get_text_stream("stdin").read()
        else:
            text = Path(source).read_text(encoding="utf-8")
        return load(text)
    except (GraphLoadError, OSError, UnicodeDecodeError) as exc:
        raise _fail(EXIT_UNREADABLE, f"{source}: {exc}")


def _emit(document: str, output: str, pretty: bool) -> None:
    """Write compact JSON text, re-indented when ``pretty``."""
    indent = get_settings().JSON_INDENT
    if output == "-":
        if pretty:
            Console(soft_wrap=True).print_json(document, indent=indent)
        else:
            typer.echo(document, nl=False)
        return
    if pretty:
        document = json.dumps(json.loads(document), indent=indent) + "\n"
    try:
        Path(output).write_text(document, encoding="utf-8")
    except OSError as exc:
        raise _fail(EXIT_UNREADABLE, f"{output}: {exc}")


def _emit_record(record: BaseModel, output: str, pretty: bool) -> None:
    _emit(record.model_dump_json() + "\n", output, pretty)


# =============================================================================
# ANALYSIS COMMANDS
# =============================================================================

@app.command("validate")
def validate_command(source: str = SOURCE, output: str = OUTPUT, pretty: bool = PRETTY) -> None:
    """Check a graph and list every violation."""
    report = validate(_read(source))
    _emit_record(report, output, pretty)
    if not report.valid:
        raise typer.Exit(code=EXIT_INVALID)


@app.command("invariants")
def invariants_command(
    source: str = SOURCE,
    output: str = OUTPUT,
    pretty: bool = PRETTY,
    coker: Optional[int] = typer.Option(None, "--coker", help="dim coker Phi, when known."),
    ker: Optional[int] = typer.Option(None, "--ker", help="dim ker Phi, when known."),
) -> None:
    """Compute chi, K^2, p_omega, q, degree, genus, class and Betti numbers."""
    graph = _read(source)
    try:
        report = full_report(graph, supplied_coker=coker, supplied_ker=ker)
    except ZappaticError as exc:
        raise _fail(EXIT_INVALID, str(exc))
    _emit_record(report, output, pretty)


@app.command("check")
def check_command(source: str = SOURCE, output: str = OUTPUT, pretty: bool = PRETTY) -> None:
    """Run the smoothability obstructions."""
    graph = _read(source)
    try:
        report = check(graph)
    except ZappaticError as exc:
        raise _fail(EXIT_INVALID, str(exc))
    _emit_record(report, output, pretty)
    if report.verdict.status is VerdictStatus.OBSTRUCTED:
        raise typer.Exit(code=EXIT_OBSTRUCTED)


@app.command("homology")
def homology_command(source: str = SOURCE, output: str = OUTPUT, pretty: bool = PRETTY) -> None:
    """Betti numbers of the associated graph and the boundary ranks."""
    graph = _read(source)
    try:
        report = homology_report(prepare(graph))
    except ZappaticError as exc:
        raise _fail(EXIT_INVALID, str(exc))
    _emit_record(report, output, pretty)


@app.command("version")
def version_command() -> None:
    """Print the package version."""
    typer.echo(__version__)


# =============================================================================
# GENERATORS
# =============================================================================

def _generate(build: Callable[[], ZappaticGraph], output: str, pretty: bool) -> None:
    try:
        graph = build()
    except ZappaticError as exc:
        raise _fail(EXIT_INVALID, str(exc))
    logger.debug("family_generated", vertices=graph.vertex_count, edges=graph.edge_count)
    _emit(serialize(graph), output, pretty)


@generate_app.command("chain")
def generate_chain(
    n: int = typer.Option(..., "--n", help="Number of planes (>= 2)."),
    output: str = OUTPUT,
    pretty: bool = PRETTY,
) -> None:
    """Chain of n planes."""
    _generate(lambda: chain_planes(n), output, pretty)


@generate_app.command("cycle")
def generate_cycle(
    n: int = typer.Option(..., "--n", help="Number of planes (>= 3)."),
    filled: bool = typer.Option(False, "--filled", help="One closed n-face instead of n R3 points."),
    output: str = OUTPUT,
    pretty: bool = PRETTY,
) -> None:
    """Cycle of n planes."""
    _generate(lambda: cycle_planes(n, filled=filled), output, pretty)


@generate_app.command("fork")
def generate_fork(
    n: int = typer.Option(..., "--n", help="Number of planes (>= 4)."),
    angle: bool = typer.Option(True, "--angle/--no-angle", help="Place one S_n point on the teeth."),
    output: str = OUTPUT,
    pretty: bool = PRETTY,
) -> None:
    """Fork of n planes."""
    _generate(lambda: fork_planes(n, with_angle=angle), output, pretty)


@generate_app.command("quadric-chain")
def generate_quadric_chain(
    n: int = typer.Option(..., "--n", help="Number of quadrics (>= 2)."),
    output: str = OUTPUT,
    pretty: bool = PRETTY,
) -> None:
    """Chain of n quadrics (general mode)."""
    _generate(lambda: quadric_chain(n), output, pretty)


@generate_app.command("quadrics-and-plane")
def generate_quadrics_and_plane(output: str = OUTPUT, pretty: bool = PRETTY) -> None:
    """Two quadrics and a plane (general mode)."""
    _generate(quadrics_and_plane, output, pretty)


@generate_app.command("veronese")
def generate_veronese(
    d: int = typer.Option(..., "--d", help="Veronese degree (>= 2)."),
    output: str = OUTPUT,
    pretty: bool = PRETTY,
) -> None:
    """Degeneration of the d-th Veronese surface to d^2 planes."""
    _generate(lambda: veronese_mt(d), output, pretty)


@generate_app.command("pillow")
def generate_pillow(
    a: int = typer.Option(..., "--a", help="First bidegree (>= 2)."),
    b: int = typer.Option(..., "--b", help="Second bidegree (>= 2)."),
    output: str = OUTPUT,
    pretty: bool = PRETTY,
) -> None:
    """Pillow of bidegree (a, b), a degenerate K3 surface."""
    _generate(lambda: pillow(a, b), output, pretty)


@generate_app.command("abelian")
def generate_abelian(
    n: int = typer.Option(..., "--n", help="Grid width (>= 2)."),
    m: int = typer.Option(..., "--m", help="Grid height (>= 2)."),
    output: str = OUTPUT,
    pretty: bool = PRETTY,
) -> None:
    """Triangulated n x m torus, a degenerate abelian surface."""
    _generate(lambda: abelian_grid(n, m), output, pretty)


@generate_app.command("nonsmoothable")
def generate_nonsmoothable(output: str = OUTPUT, pretty: bool = PRETTY) -> None:
    """Five planes passing every local test that still do not smooth."""
    _generate(nonsmoothable_example, output, pretty)


@generate_app.command("star-obstruction")
def generate_star_obstruction(output: str = OUTPUT, pretty: bool = PRETTY) -> None:
    """Five planes violating the Multiple Point Formula."""
    _generate(star_obstruction, output, pretty)


@generate_app.command("random")
def generate_random(
    seed: int = typer.Option(0, "--seed", help="Random seed."),
    size: int = typer.Option(6, "--size", help="Number of planes (>= 2)."),
    output: str = OUTPUT,
    pretty: bool = PRETTY,
) -> None:
    """Seeded random valid planar configuration."""
    _generate(lambda: random_planar_config(seed, size), output, pretty)


if __name__ == "__main__":
    app()
