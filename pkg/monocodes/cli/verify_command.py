import logging
from typing import Annotated

import typer

from monocodes.cli.output import JsonOption, SeedOption, emit, wants_json
from monocodes.core.error_handlers import handle_errors
from monocodes.core.exceptions import CheckFailedError
from monocodes.domain.enums import CheckStatus
from monocodes.schemas.report import VerifyReport
from monocodes.services.code_file_service import CodeFileService
from monocodes.services.verification_service import VerificationService
from monocodes.utils.parsing import parse_channel_spec

logger = logging.getLogger(__name__)


@handle_errors("verify")
def verify(
    ctx: typer.Context,
    code_path: Annotated[str, typer.Argument(help="Code description file (JSON)")],
    channel: Annotated[
        str | None, typer.Option("--channel", help="Also check that the code is the polar code of this channel")
    ] = None,
    seed: SeedOption = None,
    json_output: JsonOption = False,
) -> None:
    """
    Compare every closed formula that applies to the code with its brute-force
    oracle. Exits 0 when no check fails, 1 otherwise; checks that do not apply
    or exceed a size cap are reported as skipped.
    """
    loaded = CodeFileService().load(code_path)
    symmetric = parse_channel_spec(channel) if channel is not None else None
    checks = VerificationService(seed).verify(loaded.code, symmetric)
    failed = [c.name for c in checks if c.status is CheckStatus.FAILED]
    report = VerifyReport(
        input_digest=loaded.digest,
        m=loaded.code.m,
        dimension=loaded.code.dimension,
        checks=checks,
        passed=not failed,
    )
    emit(report, wants_json(ctx, json_output))
    if failed:
        raise CheckFailedError(failed)
