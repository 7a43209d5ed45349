"""Cramer CLI."""

import json
import logging
from pathlib import Path

import typer
import typer.rich_utils
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from cramer.config import CONFIG_FILE, RunConfig, get_config_template, resolve_config
from cramer.errors import CramerError, VerificationError
from cramer.export.formats import render
from cramer.group.action import orbit_sample
from cramer.ogr.identify import write_coordmap
from cramer.types import CheckResult, OmegaMode
from cramer.variety.ideal import generate_ideal
from cramer.verify.schema import schema_text
from cramer.verify.suites import SUITES, VerificationRunner, run_ogr

# Override Typer's default "dim" styles which render as dark purple on some terminals
typer.rich_utils.STYLE_HELPTEXT = ""
typer.rich_utils.STYLE_OPTION_DEFAULT = "bright_black"
typer.rich_utils.STYLE_OPTION_ENVVAR = "yellow"
typer.rich_utils.STYLE_ERRORS_SUGGESTION = ""
typer.rich_utils.STYLE_METAVAR_SEPARATOR = ""
typer.rich_utils.STYLE_OPTIONS_PANEL_BORDER = "bright_black"
typer.rich_utils.STYLE_COMMANDS_PANEL_BORDER = "bright_black"

app = typer.Typer(help="Cramer - exact toolkit for the Cramer varieties Cr(r, r+s, s)")
console = Console()
err_console = Console(stderr=True)

EXIT_FAILED = 1
EXIT_CONFIG = 2

STATUS_STYLES = {
    "pass": "[green]pass[/green]",
    "fail": "[red]fail[/red]",
    "inconclusive": "[yellow]inconclusive[/yellow]",
    "skipped": "[bright_black]skipped[/bright_black]",
}


def setup_logging(verbose: bool = False, log_file: Path | None = None):
    """Configure logging with rich handler and optional file output."""
    level = logging.DEBUG if verbose else logging.WARNING
    handlers: list[logging.Handler] = [RichHandler(console=err_console, rich_tracebacks=True)]

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.DEBUG)  # Always capture debug in file
        file_handler.setFormatter(
            logging.Formatter(
                "%(asctime)s [%(levelname)s] %(name)s: %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
            )
        )
        handlers.append(file_handler)
        level = logging.DEBUG

    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=handlers,
        force=True,
    )


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
    log_file: Path | None = typer.Option(None, "--log-file", help="Also log to this file"),
):
    setup_logging(verbose, log_file)


ConfigOption = typer.Option(None, "--config", "-c", help=f"Config file (default: ./{CONFIG_FILE})")


def load_run_config(config: Path | None, omega_less: bool = False, **overrides) -> RunConfig:
    """Resolve the run config, exiting with code 2 on bad input."""
    if config is None and Path(CONFIG_FILE).exists():
        config = Path(CONFIG_FILE)
    if omega_less:
        overrides["omega_mode"] = OmegaMode.OMEGA_LESS
    try:
        return resolve_config(config, **overrides)
    except CramerError as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_CONFIG)


def emit(text: str, output: str | None, out: Console = console) -> None:
    """Write to the output file, or to stdout."""
    if output is None:
        typer.echo(text, nl=False)
        return
    path = Path(output)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as e:
        out.print(f"[red]Error:[/red] cannot write {path}: {e}")
        raise typer.Exit(EXIT_CONFIG)
    out.print(f"Wrote {path}")


def fail(e: CramerError) -> typer.Exit:
    console.print(f"[red]Error:[/red] {e}")
    return typer.Exit(EXIT_FAILED if isinstance(e, VerificationError) else EXIT_CONFIG)


def print_checks(checks: list[CheckResult], title: str, out: Console = console) -> None:
    table = Table(title=title)
    table.add_column("Check")
    table.add_column("Status")
    table.add_column("Detail")
    for check in checks:
        table.add_row(check.name, STATUS_STYLES[check.status], check.detail)
    out.print(table)


@app.command()
def init(
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite without asking"),
):
    """Write a commented cramer.yaml in the current directory."""
    config_file = Path(CONFIG_FILE)
    if config_file.exists() and not force:
        console.print(f"[yellow]Warning:[/yellow] {CONFIG_FILE} already exists.")
        if not typer.confirm("Overwrite?"):
            raise typer.Exit(0)
    config_file.write_text(get_config_template())
    console.print(f"[green]Wrote {CONFIG_FILE}[/green]")
    console.print("Run 'cramer verify all' to check the configured variety.")


@app.command()
def ideal(
    r: int | None = typer.Option(None, "--r", help="Rows of M"),
    s: int | None = typer.Option(None, "--s", help="Columns of N"),
    omega_less: bool = typer.Option(False, "--omega-less", help="Drop the omega coordinate"),
    fmt: str | None = typer.Option(None, "--format", help="json, m2 or singular"),
    output: str | None = typer.Option(None, "--output", "-o", help="Output file"),
    config: Path | None = ConfigOption,
):
    """Generate the defining ideal and export it."""
    cfg = load_run_config(config, omega_less, r=r, s=s, format=fmt, output=output)
    try:
        generated = generate_ideal(cfg.r, cfg.s, cfg.omega_mode)
        text = render(generated, cfg.format)
    except CramerError as e:
        raise fail(e)
    emit(text, cfg.output)


@app.command()
def verify(
    suite: str = typer.Argument("all", help=f"{', '.join(SUITES)} or all"),
    r: int | None = typer.Option(None, "--r", help="Rows of M"),
    s: int | None = typer.Option(None, "--s", help="Columns of N"),
    omega_less: bool = typer.Option(False, "--omega-less", help="Drop the omega coordinate"),
    seed: int | None = typer.Option(None, "--seed", help="Random seed"),
    samples: int | None = typer.Option(None, "--samples", help="Orbit samples per check"),
    bound: int | None = typer.Option(None, "--bound", help="Entry bound for random elements"),
    jobs: int | None = typer.Option(None, "--jobs", "-j", help="Worker processes"),
    output: str | None = typer.Option(None, "--output", "-o", help="Write the JSON report here"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report to stdout"),
    config: Path | None = ConfigOption,
):
    """Run verification suites and report pass/fail per check."""
    if suite != "all" and suite not in SUITES:
        console.print(f"[red]Error:[/red] unknown suite '{suite}'. Use {', '.join(SUITES)} or all.")
        raise typer.Exit(EXIT_CONFIG)
    cfg = load_run_config(
        config,
        omega_less,
        r=r,
        s=s,
        seed=seed,
        samples=samples,
        bound=bound,
        jobs=jobs,
        output=output,
    )
    try:
        report = VerificationRunner(cfg).run(suite)
    except CramerError as e:
        raise fail(e)

    # --json keeps stdout for the report alone
    out = err_console if as_json else console
    title = f"Cr({cfg.r},{cfg.t},{cfg.s}) {cfg.omega_mode.value} - {suite}"
    print_checks(report.checks, title, out)
    if as_json:
        typer.echo(report.model_dump_json(indent=2))
    if cfg.output:
        emit(report.model_dump_json(indent=2) + "\n", cfg.output, out)

    if not report.passed:
        failed = [c.name for c in report.checks if c.failed]
        out.print(f"[red]Failed:[/red] {', '.join(failed)}")
        raise typer.Exit(EXIT_FAILED)
    out.print("[green]All checks passed.[/green]")


@app.command()
def ogr(
    search: bool = typer.Option(False, "--search", help="Search for a coordinate map"),
    budget: int | None = typer.Option(None, "--budget", help="Search nodes"),
    seed: int | None = typer.Option(None, "--seed", help="Random seed"),
    samples: int | None = typer.Option(None, "--samples", help="Cross-membership samples"),
    save_map: Path | None = typer.Option(
        None, "--save-map", help="With --search, write the map and its search log here"
    ),
    output: str | None = typer.Option(None, "--output", "-o", help="Write the JSON report here"),
    config: Path | None = ConfigOption,
):
    """Compare the omega-less Cr(2,4,2) with the spinor variety OGr(5,10)."""
    cfg = load_run_config(
        config, search=search or None, budget=budget, seed=seed, samples=samples, output=output
    )
    if save_map is not None and not cfg.search:
        console.print("[red]Error:[/red] --save-map needs --search")
        raise typer.Exit(EXIT_CONFIG)
    try:
        report = run_ogr(cfg)
    except CramerError as e:
        raise fail(e)

    console.print(f"[bold]Cramer quadrics:[/bold] {report.cramer_terms} terms")
    console.print(f"[bold]Spinor quadrics:[/bold] {report.spinor_terms} terms")
    console.print(f"[bold]Sign convention:[/bold] {report.spinor_convention}")
    console.print(
        f"[bold]Span ranks:[/bold] {report.cramer_span_rank} / {report.spinor_span_rank}"
    )
    console.print(f"[bold]Map:[/bold] {report.map_source}")
    if report.search is not None:
        found = report.search.found
        console.print(f"[bold]Search:[/bold] {report.search.nodes} nodes, found={found}")
    if report.identical_spans is not None:
        console.print(f"[bold]Identical spans:[/bold] {report.identical_spans}")
    if report.cross_membership is not None:
        print_checks([report.cross_membership], "Cross-membership")
    if save_map is not None and report.search is not None:
        try:
            for path in write_coordmap(report.search, save_map):
                console.print(f"Wrote {path}")
        except CramerError as e:
            raise fail(e)
        except OSError as e:
            console.print(f"[red]Error:[/red] cannot write {save_map}: {e}")
            raise typer.Exit(EXIT_CONFIG)
    if cfg.output:
        emit(report.model_dump_json(indent=2) + "\n", cfg.output)
    if not report.passed:
        raise typer.Exit(EXIT_FAILED)


@app.command()
def sample(
    r: int | None = typer.Option(None, "--r", help="Rows of M"),
    s: int | None = typer.Option(None, "--s", help="Columns of N"),
    omega_less: bool = typer.Option(False, "--omega-less", help="Drop the omega coordinate"),
    seed: int | None = typer.Option(None, "--seed", help="Random seed"),
    samples: int | None = typer.Option(None, "--samples", help="Number of points"),
    bound: int | None = typer.Option(None, "--bound", help="Entry bound for random elements"),
    output: str | None = typer.Option(None, "--output", "-o", help="Output file"),
    config: Path | None = ConfigOption,
):
    """Write seeded orbit points as JSON."""
    cfg = load_run_config(
        config, omega_less, r=r, s=s, seed=seed, samples=samples, bound=bound, output=output
    )
    try:
        points = orbit_sample(cfg.r, cfg.s, cfg.seed, cfg.samples, cfg.bound, cfg.omega_mode)
    except CramerError as e:
        raise fail(e)
    emit(json.dumps([p.to_dict() for p in points], indent=2) + "\n", cfg.output)


@app.command()
def schema():
    """Print the JSON schema of verify reports."""
    typer.echo(schema_text(), nl=False)
