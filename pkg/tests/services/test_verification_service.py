# ruff: noqa: S101
import pytest

from monocodes.core.config import settings
from monocodes.domain.channel import SymmetricChannel
from monocodes.domain.code import MonomialCode
from monocodes.domain.enums import CheckStatus
from monocodes.domain.sampling import random_decreasing_code
from monocodes.services.polar_service import PolarConstructionService
from monocodes.services.verification_service import VerificationService

CODE_CHECKS = [
    "decreasing",
    "order_definitions",
    "dimension",
    "duality",
    "dual_parameters",
    "sandwich_degrees",
    "min_distance",
    "min_weight_count",
    "min_weight_words",
    "lta_invariance",
    "weak_self_duality",
]


def statuses(results: list) -> dict[str, CheckStatus]:
    return {r.name: r.status for r in results}


def test_verify_reed_muller(rm_1_3: MonomialCode) -> None:
    """Test that every check passes on R(1,3)"""
    # Act
    results = VerificationService(seed=1).verify(rm_1_3)

    # Assert
    assert [r.name for r in results] == CODE_CHECKS
    assert all(r.status is CheckStatus.OK for r in results)


@pytest.mark.parametrize("m", [3, 4])
def test_verify_random_decreasing_codes(m: int) -> None:
    """Test that no check fails on sampled decreasing codes"""
    for seed in range(5):
        code = random_decreasing_code(m, seed)
        results = VerificationService(seed=seed).verify(code)
        assert CheckStatus.FAILED not in statuses(results).values(), f"seed {seed}: {code}"


def test_verify_corrupted_code(not_decreasing: MonomialCode) -> None:
    """Test that a non-decreasing set fails the decreasing check and skips the formulas"""
    # Act
    results = statuses(VerificationService().verify(not_decreasing))

    # Assert
    assert results["decreasing"] is CheckStatus.FAILED
    assert results["order_definitions"] is CheckStatus.OK
    assert results["dimension"] is CheckStatus.OK
    assert results["duality"] is CheckStatus.SKIPPED
    assert results["lta_invariance"] is CheckStatus.SKIPPED


def test_verify_zero_code_skips_distance() -> None:
    """Test that undefined quantities are reported as skipped"""
    results = statuses(VerificationService().verify(MonomialCode.from_bits(3, [])))
    assert results["min_distance"] is CheckStatus.SKIPPED
    assert CheckStatus.FAILED not in results.values()


def test_verify_polar_code(bec_half: SymmetricChannel) -> None:
    """Test the polar checks on the code built for the same channel"""
    # Arrange
    code = PolarConstructionService(bec_half).construct(4, 8)

    # Act
    results = VerificationService().verify(code, channel=bec_half)

    # Assert
    assert [r.name for r in results] == [*CODE_CHECKS, "polar_selection", "bhattacharyya_order"]
    assert CheckStatus.FAILED not in statuses(results).values()
    assert statuses(results)["polar_selection"] is CheckStatus.OK


def test_verify_code_from_another_selection(bec_half: SymmetricChannel) -> None:
    """Test that {1, x0, x1, x0*x1} is not the BEC(0.5) polar code for m=3"""
    # Act
    results = statuses(VerificationService().verify(MonomialCode.from_bits(3, [0, 1, 2, 3]), channel=bec_half))

    # Assert
    assert results["polar_selection"] is CheckStatus.FAILED
    assert results["bhattacharyya_order"] is CheckStatus.OK


def test_verify_skips_beyond_oracle_cap(rm_1_3: MonomialCode, monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that oracle checks beyond oracle_max_m are skipped, not failed"""
    monkeypatch.setattr(settings, "oracle_max_m", 2)
    results = statuses(VerificationService().verify(rm_1_3))
    assert results["order_definitions"] is CheckStatus.SKIPPED
    assert results["lta_invariance"] is CheckStatus.SKIPPED
    assert results["decreasing"] is CheckStatus.OK
