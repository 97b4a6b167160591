import logging
from collections.abc import Callable

import numpy as np

from monocodes.core.config import settings
from monocodes.core.exceptions import NotDecreasingError, ResourceCapError, UndefinedQuantityError
from monocodes.domain.channel import SymmetricChannel
from monocodes.domain.code import (
    MonomialCode,
    dual,
    dual_by_nullspace,
    dual_parameters,
    generator_rank,
    is_lta_invariant,
    min_distance,
    min_weight_count,
    min_weight_enumerate,
    r_minus,
    r_plus,
    sandwich_degrees,
    weakly_self_dual,
)
from monocodes.domain.enums import CheckStatus
from monocodes.domain.gf2 import min_weight_bruteforce, min_weight_words_bruteforce, row_space_contains, row_space_equal
from monocodes.domain.monomial import immediate_predecessors, is_decreasing_definitional, leq
from monocodes.domain.sampling import random_lta
from monocodes.schemas.report import CheckResult
from monocodes.services.polar_service import PolarConstructionService, same_bhattacharyya

logger = logging.getLogger(__name__)


class _Mismatch(Exception):
    """A formula and its oracle disagree."""


class _Skip(Exception):
    """The check does not apply to this input."""


class VerificationService:
    """
    Service comparing every closed formula with its brute-force oracle
    """

    def __init__(self, seed: int | None = None):
        self.seed = settings.default_seed if seed is None else seed

    def verify(self, code: MonomialCode, channel: SymmetricChannel | None = None) -> list[CheckResult]:
        """
        Run the oracle suite on a code and, when a channel is given, the polar checks.

        Returns:
            One result per named check, in a fixed order
        """
        checks: list[tuple[str, Callable[[], str | None]]] = [
            ("decreasing", lambda: self._check_decreasing(code)),
            ("order_definitions", lambda: self._check_order_definitions(code)),
            ("dimension", lambda: self._check_dimension(code)),
            ("duality", lambda: self._check_duality(code)),
            ("dual_parameters", lambda: self._check_dual_parameters(code)),
            ("sandwich_degrees", lambda: self._check_sandwich_degrees(code)),
            ("min_distance", lambda: self._check_min_weight(code, distance_only=True)),
            ("min_weight_count", lambda: self._check_min_weight(code, distance_only=False)),
            ("min_weight_words", lambda: self._check_min_weight_words(code)),
            ("lta_invariance", lambda: self._check_lta_invariance(code)),
            ("weak_self_duality", lambda: self._check_weak_self_duality(code)),
        ]
        if channel is not None:
            polar = PolarConstructionService(channel)
            checks.append(("polar_selection", lambda: self._check_polar_selection(code, polar)))
            checks.append(("bhattacharyya_order", lambda: self._check_bhattacharyya_order(code, polar)))

        results = [self._run(name, check) for name, check in checks]
        failed = [r.name for r in results if r.status is CheckStatus.FAILED]
        if failed:
            logger.error(f"Verification failed for {code}: {', '.join(failed)}")
        else:
            logger.info(f"Verification passed for m={code.m}, dimension={code.dimension}")
        return results

    def _run(self, name: str, check: Callable[[], str | None]) -> CheckResult:
        try:
            detail = check()
            logger.debug(f"Check {name} passed")
            return CheckResult(name=name, status=CheckStatus.OK, detail=detail)
        except _Mismatch as e:
            logger.error(f"Check {name} failed: {e}")
            return CheckResult(name=name, status=CheckStatus.FAILED, detail=str(e))
        except (_Skip, NotDecreasingError, UndefinedQuantityError, ResourceCapError) as e:
            logger.debug(f"Check {name} skipped: {e}")
            return CheckResult(name=name, status=CheckStatus.SKIPPED, detail=str(e))

    def _check_decreasing(self, code: MonomialCode) -> str | None:
        for g in code.monomials:
            for p in immediate_predecessors(g):
                if p not in code.monomials:
                    raise _Mismatch(f"{p} precedes {g} but is not in I")
        return None

    def _check_order_definitions(self, code: MonomialCode) -> str | None:
        if code.m > settings.oracle_max_m:
            raise ResourceCapError("variable count", code.m, settings.oracle_max_m, "oracle_max_m")
        fast, slow = code.is_decreasing, is_decreasing_definitional(code.monomials)
        if fast != slow:
            raise _Mismatch(f"predecessor test says {fast}, definition says {slow}")
        return None

    def _check_dimension(self, code: MonomialCode) -> str | None:
        rank = generator_rank(code)
        if rank != code.dimension:
            raise _Mismatch(f"generator rank {rank} != |I| = {code.dimension}")
        return f"{rank}"

    def _check_duality(self, code: MonomialCode) -> str | None:
        by_formula = dual(code)
        if not row_space_equal(by_formula.generator_matrix(), dual_by_nullspace(code)):
            raise _Mismatch("dual from the complement formula differs from the nullspace")
        return f"dual dimension {by_formula.dimension}"

    def _check_dual_parameters(self, code: MonomialCode) -> str | None:
        expected = dual_parameters(code)
        other = dual(code)
        observed = (r_minus(other), r_plus(other), min_distance(other))
        if observed != tuple(expected):
            raise _Mismatch(f"dual code has {observed}, formula gives {tuple(expected)}")
        return None

    def _check_sandwich_degrees(self, code: MonomialCode) -> str | None:
        observed = sandwich_degrees(code)
        expected = (r_minus(code), r_plus(code))
        if observed != expected:
            raise _Mismatch(f"containment gives {observed}, formula gives {expected}")
        return f"r_minus={expected[0]}, r_plus={expected[1]}"

    def _check_min_weight(self, code: MonomialCode, distance_only: bool) -> str | None:
        formula = (min_distance(code), min_weight_count(code))
        observed = min_weight_bruteforce(code.generator_matrix())
        if distance_only and observed[0] != formula[0]:
            raise _Mismatch(f"enumeration gives d={observed[0]}, formula gives {formula[0]}")
        if not distance_only and observed[1] != formula[1]:
            raise _Mismatch(f"enumeration gives {observed[1]} words, formula gives {formula[1]}")
        return f"{observed[0] if distance_only else observed[1]}"

    def _check_min_weight_words(self, code: MonomialCode) -> str | None:
        from_orbits = {word.bits for word in min_weight_enumerate(code)}
        from_enumeration = min_weight_words_bruteforce(code.generator_matrix())
        if from_orbits != from_enumeration:
            raise _Mismatch(f"orbits give {len(from_orbits)} words, enumeration gives {len(from_enumeration)}")
        return None

    def _check_lta_invariance(self, code: MonomialCode) -> str | None:
        if not code.is_decreasing:
            raise NotDecreasingError("LTA invariance requires decreasing I")
        if code.m > settings.oracle_max_m:
            raise ResourceCapError("variable count", code.m, settings.oracle_max_m, "oracle_max_m")
        rng = np.random.default_rng(self.seed)
        for _ in range(settings.verify_lta_maps):
            lta = random_lta(code.m, rng)
            if not is_lta_invariant(code, lta):
                raise _Mismatch(f"code not invariant under {lta}")
        return f"{settings.verify_lta_maps} maps"

    def _check_weak_self_duality(self, code: MonomialCode) -> str | None:
        if 2 * code.dimension > code.length:
            raise _Skip("criterion requires rate <= 1/2")
        criterion = weakly_self_dual(code)
        contained = row_space_contains(dual_by_nullspace(code), code.generator_matrix())
        if criterion != contained:
            raise _Mismatch(f"criterion says {criterion}, nullspace containment says {contained}")
        return f"{criterion}"

    def _check_polar_selection(self, code: MonomialCode, polar: PolarConstructionService) -> str | None:
        expected = polar.construct(code.m, code.dimension)
        if expected.monomials != code.monomials:
            missing = sorted(set(expected.monomials.bit_sets()) - set(code.monomials.bit_sets()))
            raise _Mismatch(f"not the polar code of this channel; missing bit sets {missing}")
        return None

    def _check_bhattacharyya_order(self, code: MonomialCode, polar: PolarConstructionService) -> str | None:
        values = polar.synthesize_all(code.m)
        members = list(code.monomials)
        for f in members:
            for g in members:
                if leq(f, g) and values[f] > values[g] and not same_bhattacharyya(values[f], values[g]):
                    raise _Mismatch(f"{f} precedes {g} but B={values[f]:.12g} > {values[g]:.12g}")
        return None
