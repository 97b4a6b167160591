import functools
import logging
import sys
from collections.abc import Callable
from typing import Any, ParamSpec, TypeVar

import typer
from pydantic import BaseModel, Field, ValidationError

from monocodes.core.exceptions import CheckFailedError, MonoCodesError, ResourceCapError
from monocodes.domain.enums import ExitCode

logger = logging.getLogger(__name__)

P = ParamSpec("P")
R = TypeVar("R")


class ErrorResponse(BaseModel):
    """Unified error report written to stderr."""

    exit_code: int = Field(..., description="Process exit code")
    error_code: str | None = Field(None, description="Application-specific error code")
    message: str = Field(..., description="Human-readable error message")
    command: str | None = Field(None, description="Command that failed")
    failed_checks: list[str] | None = Field(None, description="Names of failed verification checks")


def exit_code_for(exc: Exception) -> ExitCode:
    if isinstance(exc, ResourceCapError):
        return ExitCode.RESOURCE_CAP
    if isinstance(exc, CheckFailedError):
        return ExitCode.CHECK_FAILURE
    return ExitCode.USAGE_ERROR


def build_error_response(exc: Exception, command: str | None = None) -> ErrorResponse:
    """
    Map an exception onto the error report.

    Args:
        exc: The library or validation exception
        command: Name of the running command

    Returns:
        The error report with the exit code the process should end with
    """
    if isinstance(exc, MonoCodesError):
        return ErrorResponse(
            exit_code=exit_code_for(exc),
            error_code=exc.error_code,
            message=exc.message,
            command=command,
            failed_checks=exc.failed if isinstance(exc, CheckFailedError) else None,
        )
    if isinstance(exc, ValidationError):
        first = exc.errors()[0]
        return ErrorResponse(
            exit_code=ExitCode.USAGE_ERROR,
            error_code="validation_error",
            message=f"{'.'.join(str(p) for p in first['loc'])}: {first['msg']}",
            command=command,
        )
    return ErrorResponse(exit_code=ExitCode.USAGE_ERROR, error_code="invalid_input", message=str(exc), command=command)


def render_error(response: ErrorResponse, as_json: bool) -> None:
    if as_json:
        sys.stderr.write(response.model_dump_json(exclude_none=True) + "\n")
    else:
        sys.stderr.write(f"error: {response.message}\n")


def handle_errors(command: str) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """
    Turn library exceptions raised by a command into an error report on stderr
    and the matching exit code. Commands take a `json_output` flag and a Typer
    context whose `obj` may carry the global `--json` choice.
    """

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        @functools.wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            try:
                return func(*args, **kwargs)
            except (MonoCodesError, ValidationError, ValueError) as e:
                response = build_error_response(e, command)
                level = logging.ERROR if response.exit_code != ExitCode.CHECK_FAILURE else logging.WARNING
                logger.log(level, f"Command {command} failed: {response.message}", extra={"error_code": response.error_code})
                render_error(response, _json_requested(kwargs))
                raise typer.Exit(code=response.exit_code) from e

        return wrapper

    return decorator


def _json_requested(kwargs: dict[str, Any]) -> bool:
    if kwargs.get("json_output"):
        return True
    ctx = kwargs.get("ctx")
    obj = getattr(ctx, "obj", None)
    return bool(getattr(obj, "json_output", False))
