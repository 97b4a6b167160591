import logging

from monocodes.core.exceptions import MonoCodesError
from monocodes.domain.code import (
    MonomialCode,
    dual,
    dual_parameters,
    min_distance,
    min_weight_count,
    r_minus,
    r_plus,
    weakly_self_dual,
)
from monocodes.schemas.report import AnalyzeReport, DualParametersModel

logger = logging.getLogger(__name__)


class AnalysisService:
    """
    Service computing the closed-form parameters of a monomial code
    """

    def analyze(self, code: MonomialCode, input_digest: str | None = None) -> AnalyzeReport:
        """
        Dimension, sandwich degrees, minimum distance, minimum-weight count,
        dual parameters and weak self-duality. Quantities whose formula does
        not apply are left empty and explained in `notes`.
        """
        report = AnalyzeReport(
            input_digest=input_digest,
            m=code.m,
            length=code.length,
            dimension=code.dimension,
            decreasing=code.is_decreasing,
            weakly_decreasing=code.is_weakly_decreasing,
        )
        if not code.is_decreasing:
            report.notes.append("formulas require decreasing I; only the dimension is reported")
            logger.warning(f"Analysis of non-decreasing code {code}: formulas refused")
            return report
        if code.dimension == 0:
            report.notes.append("zero code: distance and minimum-weight count are undefined")
            logger.warning("Analysis of the zero code")
            return report

        report.r_plus = r_plus(code)
        report.r_minus = r_minus(code)
        report.min_distance = min_distance(code)
        report.min_weight_count = min_weight_count(code)
        try:
            params = dual_parameters(code)
            report.dual_parameters = DualParametersModel(
                r_minus=params.r_minus_dual, r_plus=params.r_plus_dual, distance=params.dual_distance
            )
        except MonoCodesError as e:
            report.notes.append(e.message)
        if 2 * code.dimension <= code.length:
            report.weakly_self_dual = weakly_self_dual(code)
        else:
            report.notes.append("weak self-duality criterion requires rate <= 1/2")
        logger.info(f"Analysed code m={code.m}, dimension={code.dimension}, d={report.min_distance}")
        return report

    def dual(self, code: MonomialCode) -> MonomialCode:
        result = dual(code)
        logger.info(f"Dual of m={code.m}, dimension={code.dimension} has dimension {result.dimension}")
        return result
