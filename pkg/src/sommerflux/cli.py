"""CLI entrypoints for sommerflux."""

from __future__ import annotations

import sys
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path

import click
import typer

from sommerflux import commands
from sommerflux.config import Settings, load_settings
from sommerflux.constants import PhysicalConstants, load_constants
from sommerflux.errors import SommerfluxError
from sommerflux.logging import configure_logging, get_logger
from sommerflux.models.report import Report
from sommerflux.registry import DataRegistry
from sommerflux.reporting import render_report, write_report
from sommerflux.verification import SUITES, VerificationRunner

app = typer.Typer(
    add_completion=False,
    help="Flux-quantization model of the Sommerfeld atom: levels, splittings and oracles",
)
logger = get_logger(__name__)


class Format(StrEnum):
    table = "table"
    csv = "csv"
    json = "json"


class Regime(StrEnum):
    weak = "weak"
    strong = "strong"


class HyperfineModel(StrEnum):
    simple = "simple"
    full = "full"
    standard = "standard"


class Convention(StrEnum):
    integer = "integer"
    half = "half"


@dataclass
class AppState:
    """Per-invocation state built by the global callback."""

    settings: Settings
    consts: PhysicalConstants
    registry: DataRegistry
    output: Path | None = None


def _fail(exc: SommerfluxError) -> typer.Exit:
    logger.debug("Command failed", exc_info=exc)
    typer.echo(f"error: {exc}", err=True)
    return typer.Exit(1)


@app.callback()
def main_callback(
    ctx: typer.Context,
    fmt: Format | None = typer.Option(
        None, "--format", help="Output format (overrides SOMMERFLUX_OUTPUT_FORMAT)"
    ),
    digits: int | None = typer.Option(
        None, "--digits", min=1, max=17, help="Significant digits in table/csv output"
    ),
    constants: Path | None = typer.Option(
        None, "--constants", help="key=value file overriding CODATA 2018 constants"
    ),
    g_s: str | None = typer.Option(
        None, "--g-s", help='Electron g-factor: "model" (exactly 2), "codata" or a number'
    ),
    species_file: Path | None = typer.Option(
        None, "--species-file", help="CSV of nuclear species merged over the packaged table"
    ),
    experimental_file: Path | None = typer.Option(
        None,
        "--experimental-file",
        help="CSV of experimental values merged over the packaged table",
    ),
    log_level: str | None = typer.Option(None, "--log-level", help="Logging level"),
    output: Path | None = typer.Option(
        None, "--output", "-o", help="Write the rendered report to this file"
    ),
) -> None:
    """Load settings, constants and reference data shared by every command."""

    settings = load_settings()
    updates: dict[str, object] = {
        "output_format": fmt.value if fmt is not None else None,
        "digits": digits,
        "constants_file": constants,
        "g_s": g_s,
        "species_file": species_file,
        "experimental_file": experimental_file,
        "log_level": log_level,
    }
    settings = settings.model_copy(update={k: v for k, v in updates.items() if v is not None})
    configure_logging(settings.log_level)

    try:
        consts = load_constants(settings.constants_file, g_s=settings.g_s)
        registry = DataRegistry.default(consts)
        if settings.species_file is not None:
            registry.load_species(settings.species_file)
        if settings.experimental_file is not None:
            registry.load_experimental(settings.experimental_file)
    except SommerfluxError as exc:
        raise _fail(exc) from exc

    logger.info("Constants loaded (g_s=%s, overrides=%s)", consts.g_s, sorted(consts.overrides))
    ctx.obj = AppState(settings=settings, consts=consts, registry=registry, output=output)


def _emit(ctx: typer.Context, build: Callable[[AppState], Report]) -> None:
    state: AppState = ctx.obj
    try:
        report = build(state)
    except SommerfluxError as exc:
        raise _fail(exc) from exc

    inputs = {**report.inputs, "g_s": state.consts.g_s}
    if state.settings.constants_file is not None:
        inputs["constants"] = str(state.settings.constants_file)
    report = report.model_copy(update={"inputs": inputs})

    fmt = state.settings.output_format
    if state.output is not None:
        path = write_report(report, state.output, fmt, state.settings.digits)
        typer.echo(str(path))
    else:
        typer.echo(render_report(report, fmt, state.settings.digits), nl=False)
    raise typer.Exit(report.exit_code)


@app.command()
def levels(
    ctx: typer.Context,
    Z: int = typer.Option(1, "--Z", help="Nuclear charge"),
    n_max: int = typer.Option(4, "--n-max", help="Highest principal quantum number"),
) -> None:
    """Gross-structure levels W(n) for n = 1..n_max."""

    _emit(ctx, lambda s: commands.cmd_levels(Z, n_max, s.consts))


@app.command()
def orbits(
    ctx: typer.Context,
    Z: int = typer.Option(1, "--Z", help="Nuclear charge"),
    n: int = typer.Option(2, "--n", help="Principal quantum number"),
    convention: Convention = typer.Option(
        Convention.integer, "--convention", help="Azimuthal quantum number convention"
    ),
) -> None:
    """Orbit geometry for every admissible n_phi of one shell."""

    _emit(
        ctx,
        lambda s: commands.cmd_orbits(Z, n, s.consts, convention.value),  # type: ignore[arg-type]
    )


@app.command()
def zeeman(
    ctx: typer.Context,
    state: str = typer.Argument(..., help="State spec, e.g. 2p3/2"),
    B: float = typer.Option(0.01, "--B", help="Magnetic field in tesla"),
    regime: Regime | None = typer.Option(None, "--regime", help="weak (Zeeman) or strong"),
    Z: int = typer.Option(1, "--Z", help="Nuclear charge"),
    strict_regime: bool = typer.Option(
        True,
        "--strict-regime/--no-strict-regime",
        help="Refuse B outside the requested regime (intermediate fields are always outside)",
    ),
) -> None:
    """Zeeman or Paschen-Back sublevels of a state."""

    _emit(
        ctx,
        lambda s: commands.cmd_zeeman(
            state,
            B,
            regime.value if regime is not None else None,  # type: ignore[arg-type]
            s.consts,
            Z=Z,
            strict_regime=strict_regime,
        ),
    )


@app.command()
def hyperfine(
    ctx: typer.Context,
    state: str = typer.Argument(..., help="State spec, e.g. 1s1/2"),
    species: str = typer.Argument("H-1", help="Nuclear species name"),
    model: HyperfineModel = typer.Option(HyperfineModel.full, "--model", help="Hyperfine model"),
    cos_beta: float = typer.Option(
        commands.GROUND_STATE_COS_BETA, "--cos-beta", help="Orientation cosine (simple model)"
    ),
    experimental_key: str | None = typer.Option(
        None, "--experimental-key", help="Experimental value to compare the interval with"
    ),
) -> None:
    """Hyperfine constant, F-level diagram and comparison with experiment."""

    _emit(
        ctx,
        lambda s: commands.cmd_hyperfine(
            state,
            species,
            model.value,  # type: ignore[arg-type]
            s.consts,
            s.registry,
            cos_beta=cos_beta,
            experimental_key=experimental_key,
        ),
    )


@app.command()
def verify(
    ctx: typer.Context,
    suite: str = typer.Argument("all", help=f"One of {', '.join(SUITES)} or all"),
    tol: float | None = typer.Option(None, "--tol", help="Residual tolerance"),
) -> None:
    """Run the numerical oracle suites."""

    if suite != "all" and suite not in SUITES:
        raise typer.BadParameter(f"unknown suite {suite!r}; expected one of {SUITES} or all")
    suites = list(SUITES) if suite == "all" else [suite]
    _emit(
        ctx,
        lambda s: commands.cmd_verify(
            VerificationRunner(s.consts, s.settings),
            suites,  # type: ignore[arg-type]
            tol,
        ),
    )


@app.command("spin-orbit")
def spin_orbit(
    ctx: typer.Context,
    state: str = typer.Argument(..., help="State spec with l >= 1, e.g. 2p3/2"),
    Z: int = typer.Option(1, "--Z", help="Nuclear charge"),
    cos_beta: float = typer.Option(1.0, "--cos-beta", help="Orientation cosine"),
    n_phi: str | None = typer.Option(
        None, "--n-phi", help="Azimuthal number of the orbit (default l + 1/2)"
    ),
) -> None:
    """Flux-model spin-orbit shift against the standard formula."""

    _emit(
        ctx,
        lambda s: commands.cmd_spin_orbit(state, Z, s.consts, cos_beta=cos_beta, n_phi=n_phi),
    )


@app.command()
def constants(ctx: typer.Context) -> None:
    """Show the active constant set with provenance."""

    _emit(ctx, lambda s: commands.cmd_constants(s.consts))


def main() -> None:
    """Console entry point; usage errors exit with status 1."""

    try:
        code = app(standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        sys.exit(1)
    except click.Abort:
        sys.exit(1)
    sys.exit(code or 0)


if __name__ == "__main__":
    main()
