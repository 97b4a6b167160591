import logging
from typing import Annotated

import typer

from monocodes import __version__
from monocodes.cli import register_commands
from monocodes.cli.output import CliState
from monocodes.core.logging import setup_logging

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="monocodes",
    help="Decreasing monomial codes: polar construction, duality, distances, orbits and oracle checks.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)


def _print_version(value: bool) -> None:
    if value:
        typer.echo(f"monocodes {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    json_output: Annotated[bool, typer.Option("--json", help="Print reports and errors as JSON")] = False,
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log at DEBUG level to stderr")] = False,
    version: Annotated[
        bool, typer.Option("--version", callback=_print_version, is_eager=True, help="Show the version and exit")
    ] = False,
) -> None:
    """Command-line front end for monomial codes."""
    setup_logging("DEBUG" if verbose else None, as_json=json_output)
    ctx.obj = CliState(json_output=json_output)
    logger.debug(f"Running {ctx.invoked_subcommand} (json={json_output})")


register_commands(app)


if __name__ == "__main__":
    app()
