from dataclasses import dataclass
from typing import Annotated, Any

import typer
from pydantic import BaseModel


@dataclass
class CliState:
    """Global options shared by every command through `ctx.obj`."""

    json_output: bool = False


JsonOption = Annotated[bool, typer.Option("--json", help="Print the report as JSON")]
SeedOption = Annotated[int | None, typer.Option("--seed", help="Seed for randomised steps (default from settings)")]
OutOption = Annotated[str | None, typer.Option("--out", help="Write the resulting code file here")]


def wants_json(ctx: typer.Context, json_output: bool) -> bool:
    state = ctx.obj if isinstance(ctx.obj, CliState) else None
    return json_output or bool(state and state.json_output)


def _format_scalar(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _format_row(row: dict[str, Any]) -> str:
    return "  ".join(_format_scalar(v) for v in row.values() if v is not None)


def emit(report: BaseModel, as_json: bool) -> None:
    """Write a report to stdout, as indented JSON or as aligned `field: value` lines."""
    if as_json:
        typer.echo(report.model_dump_json(indent=2))
        return
    data = report.model_dump(mode="json")
    width = max(len(key) for key in data)
    for key, value in data.items():
        if value is None:
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            typer.echo(f"{key}:")
            for row in value:
                typer.echo(f"  {_format_row(row)}")
        elif isinstance(value, list):
            typer.echo(f"{key:<{width}}  {', '.join(_format_scalar(v) for v in value) or '-'}")
        elif isinstance(value, dict):
            typer.echo(f"{key:<{width}}  {' '.join(f'{k}={_format_scalar(v)}' for k, v in value.items()) or '-'}")
        else:
            typer.echo(f"{key:<{width}}  {_format_scalar(value)}")
