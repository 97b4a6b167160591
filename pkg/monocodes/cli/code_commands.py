import logging
from typing import Annotated

import typer

from monocodes.cli.output import JsonOption, OutOption, emit, wants_json
from monocodes.core.error_handlers import handle_errors
from monocodes.core.exceptions import InvalidInputError
from monocodes.domain.code import MonomialCode, dual_by_nullspace, orbit_enumerate, orbit_free_entries, orbit_log2_size
from monocodes.domain.gf2 import format_matrix, kronecker_gm
from monocodes.domain.monomial import MonomialSet, decreasing_closure, format_monomial, maximal_elements, parse_monomial, young_partition
from monocodes.schemas.report import ClosureReport, DualReport, MatrixReport, OrbitReport
from monocodes.services.analysis_service import AnalysisService
from monocodes.services.code_file_service import CodeFileService
from monocodes.utils.parsing import arguments_digest, parse_monomials

logger = logging.getLogger(__name__)

CodeArgument = Annotated[str, typer.Argument(help="Code description file (JSON)")]


@handle_errors("analyze")
def analyze(ctx: typer.Context, code_path: CodeArgument, json_output: JsonOption = False) -> None:
    """
    Report dimension, r+, r-, minimum distance, number of minimum-weight
    codewords, the decreasing flags, weak self-duality and the dual parameters.
    """
    loaded = CodeFileService().load(code_path)
    emit(AnalysisService().analyze(loaded.code, loaded.digest), wants_json(ctx, json_output))


@handle_errors("dual")
def dual(ctx: typer.Context, code_path: CodeArgument, out: OutOption = None, json_output: JsonOption = False) -> None:
    """Dual of a decreasing monomial code, by the complement formula."""
    files = CodeFileService()
    loaded = files.load(code_path)
    result = AnalysisService().dual(loaded.code)
    if out is not None:
        files.save(result, out, meta=loaded.description.meta)
    report = DualReport(
        input_digest=loaded.digest,
        m=result.m,
        monomials=result.monomials.bit_sets(),
        dimension=result.dimension,
        out=out,
    )
    emit(report, wants_json(ctx, json_output))


@handle_errors("genmatrix")
def genmatrix(
    ctx: typer.Context,
    code_path: Annotated[str | None, typer.Argument(help="Code description file; omit to print G_m")] = None,
    m: Annotated[int | None, typer.Option("--m", min=1, help="Print the full matrix G_m")] = None,
    nullspace: Annotated[bool, typer.Option("--nullspace", help="Print a basis of the dual code instead")] = False,
    json_output: JsonOption = False,
) -> None:
    """
    Print a generator matrix, one row per line in '0'/'1' characters, column
    j being the evaluation point with index j.
    """
    if code_path is not None:
        loaded = CodeFileService().load(code_path)
        matrix = dual_by_nullspace(loaded.code) if nullspace else loaded.code.generator_matrix()
        digest = loaded.digest
    elif m is not None:
        full = MonomialCode(MonomialSet.from_bits(m, range(1 << m)))
        matrix = dual_by_nullspace(full) if nullspace else kronecker_gm(m)
        digest = arguments_digest(m=m, nullspace=nullspace)
    else:
        raise InvalidInputError("give a code file or --m")

    text = format_matrix(matrix)
    if wants_json(ctx, json_output):
        report = MatrixReport(input_digest=digest, nrows=matrix.nrows, ncols=matrix.ncols, rows=text.splitlines())
        emit(report, as_json=True)
    elif text:
        typer.echo(text)


@handle_errors("orbit")
def orbit(
    ctx: typer.Context,
    m: Annotated[int, typer.Option("--m", min=1, help="Number of variables")],
    monomial: Annotated[str, typer.Option("--monomial", help="Monomial, e.g. x1*x4 or 18")],
    enumerate_orbit: Annotated[bool, typer.Option("--enumerate", help="List the orbit polynomials")] = False,
    json_output: JsonOption = False,
) -> None:
    """Size of the orbit of a monomial under the lower triangular affine group."""
    g = parse_monomial(monomial, m)
    polynomials = sorted(str(poly) for poly in orbit_enumerate(g)) if enumerate_orbit else None
    log2_size = orbit_log2_size(g)
    report = OrbitReport(
        input_digest=arguments_digest(m=m, monomial=g.bits),
        m=m,
        monomial=format_monomial(g),
        partition=list(young_partition(g).parts),
        log2_size=log2_size,
        size=1 << log2_size,
        free_entries=len(orbit_free_entries(g)),
        polynomials=polynomials,
    )
    emit(report, wants_json(ctx, json_output))


@handle_errors("closure")
def closure(
    ctx: typer.Context,
    code_path: Annotated[str | None, typer.Argument(help="Code file whose monomials generate the closure")] = None,
    m: Annotated[int | None, typer.Option("--m", min=1, help="Number of variables")] = None,
    monomial: Annotated[list[str] | None, typer.Option("--monomial", help="Generator monomial; repeatable")] = None,
    out: OutOption = None,
    json_output: JsonOption = False,
) -> None:
    """Smallest decreasing monomial set containing the given monomials."""
    files = CodeFileService()
    if code_path is not None:
        loaded = files.load(code_path)
        generators = loaded.code.monomials
        digest = loaded.digest
    elif m is not None and monomial:
        generators = MonomialSet.of(m, parse_monomials(monomial, m))
        digest = arguments_digest(m=m, monomials=generators.bit_sets())
    else:
        raise InvalidInputError("give a code file, or --m with at least one --monomial")

    result = MonomialCode(decreasing_closure(generators))
    if out is not None:
        files.save(result, out, meta={"construction": "closure"})
    report = ClosureReport(
        input_digest=digest,
        m=result.m,
        generators=[format_monomial(g) for g in generators],
        monomials=result.monomials.bit_sets(),
        maximal=[format_monomial(g) for g in maximal_elements(result.monomials)],
        dimension=result.dimension,
        out=out,
    )
    emit(report, wants_json(ctx, json_output))
