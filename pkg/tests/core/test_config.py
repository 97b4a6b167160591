# ruff: noqa: S101
import pytest
from pydantic import ValidationError

from monocodes.core.config import Settings


def test_defaults() -> None:
    """Test the default caps and logging level"""
    settings = Settings()
    assert settings.log_level == "WARNING"
    assert settings.exhaustive_max_m == 16
    assert settings.merge_tolerance == 1e-9
    assert settings.ranking_tolerance == 1e-9


def test_environment_override(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that MONOCODES_ variables override defaults"""
    monkeypatch.setenv("MONOCODES_MC_MAX_WORKERS", "4")
    monkeypatch.setenv("MONOCODES_LOG_LEVEL", "DEBUG")
    settings = Settings()
    assert settings.mc_max_workers == 4
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize(
    "overrides",
    [
        {"matrix_max_m": 20, "exhaustive_max_m": 16},
        {"dense_matrix_max_m": 14, "matrix_max_m": 12},
        {"oracle_max_m": 14, "matrix_max_m": 12},
        {"alphabet_cap": 1 << 25},
        {"merge_tolerance": 1.5},
        {"ranking_tolerance": 2.0},
    ],
)
def test_inconsistent_settings_are_refused(overrides: dict[str, float]) -> None:
    """Test the cap ordering and tolerance validators"""
    with pytest.raises(ValidationError):
        Settings(**overrides)
