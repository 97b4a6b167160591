from pathlib import Path

import pytest
from typer.testing import CliRunner

from monocodes.domain.channel import SymmetricChannel, make_bec, make_bsc
from monocodes.domain.code import MonomialCode, reed_muller
from monocodes.services.code_file_service import CodeFileService

# Default timeout comes from pytest-timeout, configured in pyproject.toml


@pytest.fixture
def bec_half() -> SymmetricChannel:
    return make_bec(0.5)


@pytest.fixture
def bsc_small() -> SymmetricChannel:
    return make_bsc(0.11)


@pytest.fixture
def rm_1_3() -> MonomialCode:
    return reed_muller(1, 3)


@pytest.fixture
def rm_2_4() -> MonomialCode:
    return reed_muller(2, 4)


@pytest.fixture
def small_decreasing() -> MonomialCode:
    """{1, x0, x1, x2, x0x1} over m=3."""
    return MonomialCode.from_bits(3, [0, 1, 2, 4, 3])


@pytest.fixture
def not_decreasing() -> MonomialCode:
    """{1, x1}: x0 precedes x1 but is missing."""
    return MonomialCode.from_bits(3, [0, 2])


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def code_file(tmp_path: Path, rm_1_3: MonomialCode) -> Path:
    return CodeFileService().save(rm_1_3, tmp_path / "rm13.json")


@pytest.fixture
def corrupted_code_file(tmp_path: Path, not_decreasing: MonomialCode) -> Path:
    return CodeFileService().save(not_decreasing, tmp_path / "corrupted.json")
