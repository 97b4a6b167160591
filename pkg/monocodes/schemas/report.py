from pydantic import BaseModel, Field

from monocodes import __version__
from monocodes.domain.enums import CheckStatus


class ReportBase(BaseModel):
    """Fields shared by every command report."""

    tool: str = "monocodes"
    version: str = __version__
    command: str
    input_digest: str | None = Field(None, description="sha256 of the input file or of the canonical arguments")


class ConstructReport(ReportBase):
    command: str = "construct"
    channel: str
    m: int
    k: int
    monomials: list[int]
    worst_bhattacharyya: float | None = Field(None, description="Largest B(W^g) among the selected monomials")
    decreasing: bool
    weakly_decreasing: bool
    out: str | None = None


class DualParametersModel(BaseModel):
    r_minus: int
    r_plus: int
    distance: int


class AnalyzeReport(ReportBase):
    command: str = "analyze"
    m: int
    length: int
    dimension: int
    decreasing: bool
    weakly_decreasing: bool
    r_plus: int | None = None
    r_minus: int | None = None
    min_distance: int | None = None
    min_weight_count: int | None = None
    weakly_self_dual: bool | None = None
    dual_parameters: DualParametersModel | None = None
    notes: list[str] = Field(default_factory=list, description="Quantities refused and why")


class DualReport(ReportBase):
    command: str = "dual"
    m: int
    monomials: list[int]
    dimension: int
    out: str | None = None


class MatrixReport(ReportBase):
    command: str = "genmatrix"
    nrows: int
    ncols: int
    rows: list[str]


class OrbitReport(ReportBase):
    command: str = "orbit"
    m: int
    monomial: str
    partition: list[int]
    log2_size: int
    size: int
    free_entries: int
    polynomials: list[str] | None = None


class ClosureReport(ReportBase):
    command: str = "closure"
    m: int
    generators: list[str]
    monomials: list[int]
    maximal: list[str]
    dimension: int
    out: str | None = None


class RankedEntry(BaseModel):
    monomial: str
    bits: int
    bhattacharyya: float


class RankReport(ReportBase):
    command: str = "rank"
    channel: str
    m: int
    ranking: list[RankedEntry]


class SimulateReport(ReportBase):
    command: str = "simulate"
    channel: str
    m: int
    monomial: str
    samples: int
    seed: int
    estimate: float
    stderr: float
    exact: float | None = Field(None, description="Exact B(W^g) when the synthesis fits the caps")


class CheckResult(BaseModel):
    name: str
    status: CheckStatus
    detail: str | None = None


class VerifyReport(ReportBase):
    command: str = "verify"
    m: int
    dimension: int
    checks: list[CheckResult]
    passed: bool
