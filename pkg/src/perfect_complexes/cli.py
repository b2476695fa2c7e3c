"""Command-line entry point for the perfect complex toolkit."""

from __future__ import annotations

import logging
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Any, Iterator, Optional

import typer

from .config import AppConfig, load_app_config
from .decomposition import RefinementLevel
from .errors import (
    ComplexToolkitError,
    FactorizationUnsupportedError,
    InvalidComplexError,
)
from .minimization import ScanOrder
from .orchestrator import (
    AnalysisOutcome,
    GeneratorKind,
    analyze_certify,
    analyze_cohomology,
    analyze_decompose,
    analyze_minimize,
    analyze_validate,
    analyze_width,
    generate,
    run_dedekind_demo,
    run_local_demo,
)
from .outputs.writer_json import complex_to_dict, dumps_json, planted_to_dict, write_json
from .parsers import RING_GRAMMAR_HELP, load_certificate, load_complex, parse_plan, parse_ring
from .utils.logging import setup_logging

LOGGER = logging.getLogger(__name__)

EXIT_REFUSED = 1
EXIT_USAGE = 2

app = typer.Typer(help="Exact computations with perfect complexes of free modules.")


class AnalysisKind(str, Enum):
    VALIDATE = "validate"
    MINIMIZE = "minimize"
    WIDTH = "width"
    DECOMPOSE = "decompose"
    COHOMOLOGY = "cohomology"
    CERTIFY = "certify"


class RefineChoice(str, Enum):
    INVARIANT = "invariant"
    PRIMARY = "primary"


class DemoScenario(str, Enum):
    DEDEKIND = "dedekind"
    LOCAL = "local"


_REFINEMENT = {
    RefineChoice.INVARIANT: RefinementLevel.INVARIANT_FACTOR,
    RefineChoice.PRIMARY: RefinementLevel.PRIMARY,
}


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Violations and refusals exit 1; capability and usage errors exit 2."""

    try:
        yield
    except (InvalidComplexError, FactorizationUnsupportedError) as exc:
        typer.echo(f"Error: {exc}", err=True)
        raise typer.Exit(EXIT_REFUSED) from exc
    except (ComplexToolkitError, ValueError) as exc:
        typer.echo(f"Error: {exc}", err=True)
        raise typer.Exit(EXIT_USAGE) from exc


def _emit(payload: Any, text: Optional[str], out: Optional[Path] = None) -> None:
    if out is not None:
        write_json(payload, out)
        LOGGER.info("Wrote %s", out)
        if text is not None:
            typer.echo(text)
    elif text is None:
        typer.echo(dumps_json(payload), nl=False)
    else:
        typer.echo(text)


@app.callback()
def main(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(
        None,
        "--config",
        help="Path to a TOML configuration file.",
    ),
    verbose: bool = typer.Option(
        False,
        "--verbose/--no-verbose",
        help="Enable verbose logging.",
    ),
) -> None:
    """Set up shared context before executing commands."""

    with _exit_codes():
        settings = load_app_config(config)
    log_level = logging.DEBUG if verbose else logging.INFO
    setup_logging(level=log_level, log_file=settings.log_file)
    ctx.obj = {
        "settings": settings,
    }


@app.command()
def gen(
    ctx: typer.Context,
    kind: GeneratorKind = typer.Argument(..., help="Generator family."),
    n: Optional[int] = typer.Option(
        None,
        "--n",
        help="Number of variables (koszul, iterated, multi) or the length of fn.",
    ),
    m: int = typer.Option(1, "--m", help="Number of glue junctions for multi."),
    ring: Optional[str] = typer.Option(
        None,
        "--ring",
        help=f"Coefficient ring; defaults to q-local:2, or int for scrambled. {RING_GRAMMAR_HELP}",
    ),
    plan: Optional[str] = typer.Option(
        None,
        "--plan",
        help='Planted summands for scrambled, e.g. "(0,c2),(0,c3),(1,f)".',
    ),
    seed: int = typer.Option(0, "--seed", help="Scramble seed."),
    ops: Optional[int] = typer.Option(None, "--ops", help="Number of elementary operations."),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file; stdout when omitted."),
) -> None:
    """Generate a complex as JSON."""

    settings: AppConfig = ctx.obj["settings"]
    with _exit_codes():
        if ring is None:
            ring = "int" if kind is GeneratorKind.SCRAMBLED else "q-local:2"
        descriptor = parse_ring(ring)
        summands = ()
        if kind is GeneratorKind.SCRAMBLED:
            if not plan:
                raise ValueError('scrambled needs a plan, e.g. --plan "(0,c2),(0,c3)"')
            summands = tuple(parse_plan(plan, descriptor))
        if ops is not None and ops < 0:
            raise ValueError(f"--ops must be nonnegative, got {ops}")
        complex_, planted = generate(
            kind,
            descriptor,
            n=n,
            m=m,
            plan=summands,
            seed=seed,
            ops=settings.scramble_ops if ops is None else ops,
            coefficient_bound=settings.scramble_coefficient_bound,
        )
    payload = planted_to_dict(planted) if planted is not None else complex_to_dict(complex_)
    LOGGER.info("Generated %s", complex_)
    _emit(payload, None if out is None else f"wrote {complex_} to {out}", out)


@app.command()
def analyze(
    ctx: typer.Context,
    subcommand: AnalysisKind = typer.Argument(..., help="Analysis to run."),
    input_path: Path = typer.Argument(..., help="Complex JSON file (planted files are accepted)."),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report."),
    refine: RefineChoice = typer.Option(
        RefineChoice.INVARIANT, "--refine", help="Refinement level for decompose."
    ),
    check: bool = typer.Option(
        True, "--check/--no-check", help="Check d∘d = 0 when reading the input."
    ),
    scan: ScanOrder = typer.Option(ScanOrder.ROW, "--scan", help="Pivot scan order for minimize."),
    verify: Optional[Path] = typer.Option(
        None, "--verify", help="Replay a stored certificate instead of searching (certify)."
    ),
) -> None:
    """Analyze a complex read from a JSON file."""

    outcome: AnalysisOutcome
    with _exit_codes():
        if subcommand is AnalysisKind.VALIDATE:
            outcome = analyze_validate(load_complex(input_path, check=False))
        else:
            c = load_complex(input_path, check=check)
            if subcommand is AnalysisKind.MINIMIZE:
                outcome = analyze_minimize(c, scan)
            elif subcommand is AnalysisKind.WIDTH:
                outcome = analyze_width(c)
            elif subcommand is AnalysisKind.DECOMPOSE:
                outcome = analyze_decompose(c, _REFINEMENT[refine])
            elif subcommand is AnalysisKind.COHOMOLOGY:
                outcome = analyze_cohomology(c)
            else:
                stored = load_certificate(verify) if verify is not None else None
                outcome = analyze_certify(c, stored)

    _emit(outcome.payload, None if as_json else outcome.text)
    if outcome.note:
        typer.echo(outcome.note, err=True)
    if not outcome.ok:
        raise typer.Exit(EXIT_REFUSED)


@app.command()
def demo(
    ctx: typer.Context,
    scenario: DemoScenario = typer.Argument(..., help="dedekind or local."),
    trials: Optional[int] = typer.Option(None, "--trials", help="Number of dedekind trials."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Master seed for dedekind trials."),
    max_n: Optional[int] = typer.Option(
        None, "--max-n", help="Largest length certified by the local scenario."
    ),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report."),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON report here."),
    workers: Optional[int] = typer.Option(None, "--workers", help="Parallel worker processes."),
) -> None:
    """Run a classification demo and report failures."""

    settings: AppConfig = ctx.obj["settings"]
    with _exit_codes():
        if workers is not None and workers < 1:
            raise ValueError(f"--workers must be a positive integer, got {workers}")
        if scenario is DemoScenario.DEDEKIND:
            report = run_dedekind_demo(settings, trials=trials, seed=seed, workers=workers)
        else:
            report = run_local_demo(settings, max_n=max_n, workers=workers)

    payload = report.to_dict()
    if out is not None:
        write_json(payload, out)
    _emit(payload, None if as_json else str(report))
    if not report.ok:
        raise typer.Exit(EXIT_REFUSED)


if __name__ == "__main__":  # pragma: no cover
    app()
