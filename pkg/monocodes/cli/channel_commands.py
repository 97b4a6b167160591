import logging
from typing import Annotated

import typer

from monocodes.core.config import settings
from monocodes.core.error_handlers import handle_errors
from monocodes.core.exceptions import ResourceCapError
from monocodes.cli.output import JsonOption, OutOption, SeedOption, emit, wants_json
from monocodes.domain.channel import bhattacharyya, synthesize_bit_channel
from monocodes.domain.monomial import format_monomial, parse_monomial
from monocodes.schemas.report import ConstructReport, RankedEntry, RankReport, SimulateReport
from monocodes.services.code_file_service import CodeFileService
from monocodes.services.polar_service import PolarConstructionService
from monocodes.utils.parsing import arguments_digest, parse_channel_spec

logger = logging.getLogger(__name__)

ChannelArgument = Annotated[str, typer.Argument(help="Channel spec: bec:<p>, bsc:<p> or table:<path>")]
MOption = Annotated[int, typer.Option("--m", min=1, help="Number of variables; length 2^m")]


@handle_errors("construct")
def construct(
    ctx: typer.Context,
    channel: ChannelArgument,
    m: MOption,
    k: Annotated[int, typer.Option("--k", min=0, help="Code dimension")],
    out: OutOption = None,
    json_output: JsonOption = False,
) -> None:
    """
    Build the polar code of length 2^m and dimension k for a channel: the k
    monomials whose bit channels have the smallest Bhattacharyya values.
    """
    code, ranking = PolarConstructionService(parse_channel_spec(channel)).construct_ranked(m, k)
    if out is not None:
        CodeFileService().save(code, out, meta={"channel": channel, "construction": "polar"})
    report = ConstructReport(
        input_digest=arguments_digest(channel=channel, m=m, k=k),
        channel=channel,
        m=m,
        k=k,
        monomials=code.monomials.bit_sets(),
        worst_bhattacharyya=ranking[k - 1].bhattacharyya if k else None,
        decreasing=code.is_decreasing,
        weakly_decreasing=code.is_weakly_decreasing,
        out=out,
    )
    emit(report, wants_json(ctx, json_output))


@handle_errors("rank")
def rank(ctx: typer.Context, channel: ChannelArgument, m: MOption, json_output: JsonOption = False) -> None:
    """List every monomial by increasing Bhattacharyya value of its bit channel."""
    ranking = PolarConstructionService(parse_channel_spec(channel)).rank_monomials(m)
    report = RankReport(
        input_digest=arguments_digest(channel=channel, m=m),
        channel=channel,
        m=m,
        ranking=[
            RankedEntry(monomial=format_monomial(entry.monomial), bits=entry.monomial.bits, bhattacharyya=entry.bhattacharyya)
            for entry in ranking
        ],
    )
    emit(report, wants_json(ctx, json_output))


@handle_errors("simulate")
def simulate(
    ctx: typer.Context,
    channel: ChannelArgument,
    m: MOption,
    monomial: Annotated[str, typer.Option("--monomial", help="Bit channel to simulate, e.g. x0*x2 or 5")],
    samples: Annotated[int, typer.Option("--samples", help="Number of Monte-Carlo samples")] = 100_000,
    seed: SeedOption = None,
    json_output: JsonOption = False,
) -> None:
    """
    Estimate B(W^g) by simulating the bit channel, and report the exact value
    alongside when the exact synthesis fits the configured caps.
    """
    symmetric = parse_channel_spec(channel)
    g = parse_monomial(monomial, m)
    effective_seed = settings.default_seed if seed is None else seed
    estimate = PolarConstructionService(symmetric).monte_carlo_bhattacharyya(g, samples, effective_seed)
    try:
        exact: float | None = bhattacharyya(synthesize_bit_channel(symmetric, g))
    except ResourceCapError as e:
        logger.warning(f"Exact value unavailable: {e.message}")
        exact = None
    report = SimulateReport(
        input_digest=arguments_digest(channel=channel, m=m, monomial=g.bits, samples=samples, seed=effective_seed),
        channel=channel,
        m=m,
        monomial=format_monomial(g),
        samples=estimate.samples,
        seed=effective_seed,
        estimate=estimate.estimate,
        stderr=estimate.stderr,
        exact=exact,
    )
    emit(report, wants_json(ctx, json_output))
