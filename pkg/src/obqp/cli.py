"""CLI interface for obqp."""

import functools
import logging
import sys
from pathlib import Path
from typing import Any, Callable, NoReturn, Optional

import click

from obqp import __version__
from obqp.commands import (
    CommandOutcome,
    Target,
    bennequin_command,
    classify_command,
    compile_command,
    destabilize_command,
    hopf_command,
    invariants_command,
    normalize_command,
    run_session,
    script_command,
    stabilize_command,
    verify_command,
)
from obqp.config import load_config
from obqp.config.loader import create_default_config_file
from obqp.constants import (
    DEFAULT_CONFIG_FILENAME,
    DEFAULT_LOG_FORMAT_SIMPLE,
    DEFAULT_LOG_FORMAT_VERBOSE,
    EXIT_EXPECTATION_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_IO_ERROR,
    EXIT_SUCCESS,
    QUOTIENT_H1F,
    QUOTIENT_H1F_MINUS_P,
    REPORTER_FORMATS,
)
from obqp.exceptions import (
    ConfigLoadError,
    DocumentError,
    DocumentSyntaxError,
    InternalInvariantError,
    ObqpError,
)
from obqp.models.certificate import QPLevel
from obqp.models.config import ObqpConfig
from obqp.models.surface import HandleVariant, HomologyQuotient
from obqp.parsers import build_session, parse, parse_hopf_curve_spec
from obqp.parsers.session import Session
from obqp.reporters import BaseReporter, get_reporter

logger = logging.getLogger(__name__)

LEVEL_CHOICES = [level.value for level in QPLevel]


def setup_logging(verbose: bool, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    elif verbose:
        level = logging.DEBUG
    else:
        level = logging.INFO

    log_format = DEFAULT_LOG_FORMAT_VERBOSE if verbose else DEFAULT_LOG_FORMAT_SIMPLE
    logging.basicConfig(level=level, format=log_format, stream=sys.stderr, force=True)


def exit_code_for(error: BaseException) -> int:
    """Exit code for an error raised while running a command."""
    if isinstance(error, InternalInvariantError):
        return EXIT_INTERNAL_ERROR
    if isinstance(error, (ConfigLoadError, OSError)):
        return EXIT_IO_ERROR
    if isinstance(error, (ObqpError, ValueError, UnicodeDecodeError)):
        return EXIT_INPUT_ERROR
    return EXIT_INTERNAL_ERROR


def error_payload(error: BaseException) -> dict[str, Any]:
    payload: dict[str, Any] = {"type": type(error).__name__, "message": str(error)}
    if isinstance(error, DocumentError):
        payload.update(message=error.message, line=error.line, column=error.column)
    if isinstance(error, DocumentSyntaxError):
        payload["issues"] = [
            {"line": issue.line, "column": issue.column, "message": issue.message}
            for issue in error.issues
        ]
    return payload


class RunContext:
    """Options shared by every subcommand that reads a document."""

    def __init__(
        self, format: str, config_path: Optional[Path], verbose: bool, quiet: bool
    ) -> None:
        setup_logging(verbose, quiet)
        self.format = format
        self.verbose = verbose
        self.config_path = config_path
        self.config = ObqpConfig.default()
        self.reporter: BaseReporter = get_reporter(format, verbose=verbose)

    def load(self) -> None:
        self.config = load_config(self.config_path)
        self.reporter = get_reporter(self.format, verbose=self.verbose, indent=self.config.indent)

    def session(self, document: Path) -> Session:
        text = document.read_text(encoding="utf-8")
        return build_session(parse(text), self.config.convention)

    def finish(self, command: str, outcome: CommandOutcome) -> NoReturn:
        self.reporter.report(command, outcome.payload)
        sys.exit(EXIT_EXPECTATION_FAILED if outcome.failed else EXIT_SUCCESS)

    def fail(self, command: str, error: BaseException) -> NoReturn:
        code = exit_code_for(error)
        if code == EXIT_INTERNAL_ERROR:
            logger.error(f"Internal error: {error}")
            if self.verbose:
                import traceback

                traceback.print_exc()
        else:
            logger.debug(f"{command} failed: {error}")
        self.reporter.report_error(command, error_payload(error))
        sys.exit(code)


def common_options(func: Callable[..., None]) -> Callable[..., None]:
    """Add --format, --config, --verbose and --quiet, passing a RunContext as ``ctx``."""

    @click.option(
        "--format",
        "-f",
        "format",
        type=click.Choice(REPORTER_FORMATS),
        default="json",
        help="Output format.",
    )
    @click.option(
        "--config",
        "-C",
        "config_path",
        type=click.Path(path_type=Path),
        default=None,
        help="Path to configuration file.",
    )
    @click.option("--verbose", "-v", is_flag=True, help="Enable verbose output.")
    @click.option("--quiet", "-q", is_flag=True, help="Suppress non-error output.")
    @functools.wraps(func)
    def wrapper(
        format: str, config_path: Optional[Path], verbose: bool, quiet: bool, **kwargs: Any
    ) -> None:
        func(ctx=RunContext(format, config_path, verbose, quiet), **kwargs)

    return wrapper


target_option = click.option(
    "--target", "-t", default=None, help="Pob or word to act on (default: the last declared)."
)
document_argument = click.argument("document", type=click.Path(path_type=Path))


def _run(
    ctx: RunContext,
    command: str,
    document: Path,
    target: Optional[str],
    action: Callable[[Target, ObqpConfig], CommandOutcome],
) -> NoReturn:
    try:
        ctx.load()
        session = ctx.session(document)
        outcome = action(Target.from_session(session, target), ctx.config)
    except Exception as e:
        ctx.fail(command, e)
    ctx.finish(command, outcome)


@click.group()
@click.version_option(version=__version__, prog_name="obqp")
def main() -> None:
    """Word calculus for pointed open books and braids."""
    pass


@main.command()
@document_argument
@target_option
@click.option(
    "--quotient",
    type=click.Choice([QUOTIENT_H1F, QUOTIENT_H1F_MINUS_P]),
    default=None,
    help="Group for the Stein nontriviality test (overrides config).",
)
@click.option(
    "--expect",
    type=click.Choice(LEVEL_CHOICES),
    default=None,
    help="Exit with code 2 unless the word reaches this level.",
)
@common_options
def classify(
    ctx: RunContext,
    document: Path,
    target: Optional[str],
    quotient: Optional[str],
    expect: Optional[str],
) -> None:
    """Classify a word as quasipositive, strongly quasipositive and Stein quasipositive."""
    _run(
        ctx,
        "classify",
        document,
        target,
        lambda t, config: classify_command(
            t,
            config,
            HomologyQuotient(quotient) if quotient else None,
            QPLevel(expect) if expect else None,
        ),
    )


@main.command()
@document_argument
@click.argument("certificate", type=click.Path(path_type=Path))
@target_option
@common_options
def verify(ctx: RunContext, document: Path, certificate: Path, target: Optional[str]) -> None:
    """Verify a JSON certificate against a word; exit 2 if it is rejected."""

    def action(t: Target, config: ObqpConfig) -> CommandOutcome:
        return verify_command(t, config, certificate.read_text(encoding="utf-8"))

    _run(ctx, "verify", document, target, action)


@main.command()
@document_argument
@target_option
@click.option("--budget", "-b", type=int, default=None, help="Maximum rewrite depth.")
@click.option(
    "--level",
    type=click.Choice(LEVEL_CHOICES),
    default=QPLevel.QP.value,
    help="Level to search a certificate for.",
)
@common_options
def normalize(
    ctx: RunContext, document: Path, target: Optional[str], budget: Optional[int], level: str
) -> None:
    """Search sound rewrites of a word for a certified quasipositive form."""
    _run(
        ctx,
        "normalize",
        document,
        target,
        lambda t, config: normalize_command(t, config, budget, QPLevel(level)),
    )


@main.command("compile")
@document_argument
@target_option
@common_options
def compile_(ctx: RunContext, document: Path, target: Optional[str]) -> None:
    """Compile a disk-page word to an Artin braid word."""
    _run(ctx, "compile", document, target, compile_command)


@main.command()
@document_argument
@target_option
@common_options
def invariants(ctx: RunContext, document: Path, target: Optional[str]) -> None:
    """Homological action, surface data and braid invariants of a word."""
    _run(ctx, "invariants", document, target, invariants_command)


@main.command()
@document_argument
@click.argument("sign", type=click.Choice(["+", "-"]), default="+")
@target_option
@common_options
def stabilize(ctx: RunContext, document: Path, sign: str, target: Optional[str]) -> None:
    """Markov stabilize: add a marked point and a half-twist of the given sign."""
    value = 1 if sign == "+" else -1
    _run(ctx, "stabilize", document, target, lambda t, config: stabilize_command(t, config, value))


@main.command()
@document_argument
@target_option
@common_options
def destabilize(ctx: RunContext, document: Path, target: Optional[str]) -> None:
    """Undo a Markov stabilization when the word allows it."""
    _run(ctx, "destabilize", document, target, destabilize_command)


@main.command()
@document_argument
@target_option
@click.option(
    "--variant",
    type=click.Choice(["same", "two", "same_boundary", "two_boundaries"]),
    required=True,
    help="Attach the handle to one boundary component or join two.",
)
@click.option(
    "--curve",
    required=True,
    help="Curve spec: '<id> class=[..] [handle=N] [collar_avoiding=true|false]'.",
)
@common_options
def hopf(
    ctx: RunContext, document: Path, target: Optional[str], variant: str, curve: str
) -> None:
    """Hopf stabilize: attach a 1-handle and add a positive twist through it."""

    def action(t: Target, config: ObqpConfig) -> CommandOutcome:
        spec = parse_hopf_curve_spec(curve)
        return hopf_command(t, config, HandleVariant.parse(variant), spec)

    _run(ctx, "hopf", document, target, action)


@main.command()
@document_argument
@target_option
@common_options
def bennequin(ctx: RunContext, document: Path, target: Optional[str]) -> None:
    """Bennequin surface invariants: chi, boundary, genus and self-linking."""
    _run(ctx, "bennequin", document, target, bennequin_command)


@main.group()
def script() -> None:
    """Move scripts."""
    pass


@script.command("apply")
@document_argument
@click.argument("moves", type=click.Path(path_type=Path))
@target_option
@common_options
def script_apply(ctx: RunContext, document: Path, moves: Path, target: Optional[str]) -> None:
    """Replay a JSON move script starting from a word."""

    def action(t: Target, config: ObqpConfig) -> CommandOutcome:
        return script_command(t, config, moves.read_text(encoding="utf-8"))

    _run(ctx, "script apply", document, target, action)


@main.command()
@document_argument
@common_options
def run(ctx: RunContext, document: Path) -> None:
    """Execute every directive of a document in order."""
    try:
        ctx.load()
        session = ctx.session(document)
        outcome = run_session(session, ctx.config, document.parent)
    except Exception as e:
        ctx.fail("run", e)
    ctx.finish("run", outcome)


@main.command()
@click.option(
    "--output",
    "-o",
    type=click.Path(path_type=Path),
    default=None,
    help="Output path for configuration file.",
)
@click.option(
    "--force",
    is_flag=True,
    help="Overwrite existing configuration file.",
)
def init(output: Optional[Path], force: bool) -> None:
    """Initialize a new obqp configuration file."""
    output_path = output or Path.cwd() / DEFAULT_CONFIG_FILENAME

    if output_path.exists() and not force:
        raise click.ClickException(
            f"Configuration file already exists: {output_path}. Use --force to overwrite."
        )

    try:
        created_path = create_default_config_file(output_path)
        click.echo(f"Created obqp configuration file: {created_path}")
    except OSError as e:
        raise click.ClickException(f"Failed to create configuration file: {e}")
