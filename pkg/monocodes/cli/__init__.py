import typer

from monocodes.cli.channel_commands import construct, rank, simulate
from monocodes.cli.code_commands import analyze, closure, dual, genmatrix, orbit
from monocodes.cli.verify_command import verify


def register_commands(app: typer.Typer) -> None:
    app.command("construct")(construct)
    app.command("analyze")(analyze)
    app.command("dual")(dual)
    app.command("genmatrix")(genmatrix)
    app.command("orbit")(orbit)
    app.command("closure")(closure)
    app.command("rank")(rank)
    app.command("simulate")(simulate)
    app.command("verify")(verify)
