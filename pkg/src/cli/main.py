# chrdc entry point

from pathlib import Path

import click
from src.cli.report import emit_report, emit_trace
from src.config.analysis_config import FORMATS, AnalysisConfig, load_config
from src.config.logger import get_logger
from src.core.errors import ChrdcError
from src.core.jobs.check import MODES, check as run_check, exit_code
from src.core.jobs.peaks import list_peaks
from src.core.jobs.trace import trace
from src.core.syntax.ast import Program
from src.core.syntax.parser import parse_program

EXIT_INPUT_ERROR = 2
_INPUT_ERRORS = (ChrdcError, OSError, ValueError)

def _read_programs(paths) -> list[Program]:
    return [parse_program(Path(p).read_text(encoding="utf-8")) for p in paths]

def _input_error(ctx: click.Context, e: Exception) -> None:
    click.echo(f"chrdc: {e}", err=True)
    ctx.exit(EXIT_INPUT_ERROR)

def _fmt(flag: str | None, config: AnalysisConfig) -> str:
    return flag or config.format or "text"

def analysis_options(f):
    options = [
        click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
                     help="Analysis config (.cfg): partition, order, limits, options, tactics"),
        click.option("--format", "fmt", type=click.Choice(FORMATS), default=None,
                     help="Report format, text unless the config says otherwise"),
        click.option("--max-depth", type=click.IntRange(min=0), default=None, help="Closing search depth"),
        click.option("--max-states", type=click.IntRange(min=0), default=None, help="States explored per reduct"),
    ]
    for option in reversed(options):
        f = option(f)
    return f

@click.group()
@click.version_option("1.0.0", prog_name="chrdc")
def main():
    """Confluence analysis for Constraint Handling Rules programs."""
    pass

@main.command()
@click.argument("files", nargs=-1, required=True, type=click.Path(dir_okay=False))
@analysis_options
@click.pass_context
def peaks(ctx, files, config_path, fmt, max_depth, max_states):
    """List the critical peaks of FILE, or the cross peaks of two FILES."""
    logger = get_logger("cli-peaks")

    try:
        config = load_config(config_path)
        report = list_peaks(_read_programs(files), config)
    except _INPUT_ERRORS as e:
        logger.error(f"peaks failed - {e}")
        _input_error(ctx, e)
        return

    emit_report(report, _fmt(fmt, config))

@main.command()
@click.argument("files", nargs=-1, required=True, type=click.Path(dir_okay=False))
@click.option("--mode", type=click.Choice(MODES), default="decreasing", show_default=True,
              help="Criterion to check; modular takes two files")
@analysis_options
@click.pass_context
def check(ctx, files, mode, config_path, fmt, max_depth, max_states):
    """Check FILES for confluence; exit 0 when established, 1 when not."""
    logger = get_logger("cli-check")

    try:
        config = load_config(config_path)
        report = run_check(mode, _read_programs(files), config, max_depth, max_states)
    except _INPUT_ERRORS as e:
        logger.error(f"check failed - {e}")
        _input_error(ctx, e)
        return

    emit_report(report, _fmt(fmt, config))
    ctx.exit(exit_code(report))

@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--query", required=True, help="Initial state, e.g. 'leq(A,B), leq(B,A)'")
@click.option("--steps", type=click.IntRange(min=0), default=10, show_default=True, help="Maximal number of steps")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@click.pass_context
def run(ctx, file, query, steps, fmt):
    """Execute a query on FILE, taking the first applicable step each time."""
    logger = get_logger("cli-run")

    try:
        program, = _read_programs([file])
        derivation = trace(program, query, steps)
    except _INPUT_ERRORS as e:
        logger.error(f"run failed - {e}")
        _input_error(ctx, e)
        return

    emit_trace(derivation, fmt)

if __name__ == "__main__":
    main()
