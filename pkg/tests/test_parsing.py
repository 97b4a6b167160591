# ruff: noqa: S101
import json
from pathlib import Path

import pytest

from monocodes.core.exceptions import ChannelError, InvalidInputError
from monocodes.domain.channel import bhattacharyya
from monocodes.utils.parsing import arguments_digest, load_channel_table, parse_channel_spec, parse_monomials


@pytest.mark.parametrize(
    ("spec", "expected"),
    [("bec:0.5", 0.5), ("BSC:0.11", 2 * (0.11 * 0.89) ** 0.5), ("bec:0", 0.0)],
)
def test_parse_channel_spec(spec: str, expected: float) -> None:
    """Test the erasure and symmetric channel families"""
    assert bhattacharyya(parse_channel_spec(spec)) == pytest.approx(expected, abs=1e-12)


def test_load_channel_table(tmp_path: Path) -> None:
    """Test a labelled table file"""
    # Arrange
    path = tmp_path / "bsc.json"
    path.write_text(json.dumps({"alphabet": ["a", "b"], "p0": [0.9, 0.1], "p1": [0.1, 0.9], "involution": [1, 0]}))

    # Act
    channel = load_channel_table(path)

    # Assert
    assert channel.labels == ("a", "b")
    assert bhattacharyya(channel) == pytest.approx(0.6, abs=1e-12)


def test_load_channel_table_errors(tmp_path: Path) -> None:
    """Test missing files, short rows and asymmetric tables"""
    with pytest.raises(InvalidInputError, match="cannot read"):
        load_channel_table(tmp_path / "missing.json")

    ragged = tmp_path / "ragged.json"
    ragged.write_text(json.dumps({"p0": [0.5, 0.5], "p1": [1.0], "involution": [1, 0]}))
    with pytest.raises(ChannelError, match="malformed channel table"):
        load_channel_table(ragged)

    asymmetric = tmp_path / "asymmetric.json"
    asymmetric.write_text(json.dumps({"p0": [0.7, 0.3], "p1": [0.4, 0.6], "involution": [1, 0]}))
    with pytest.raises(ChannelError):
        load_channel_table(asymmetric)


def test_parse_monomials_accepts_lists() -> None:
    """Test repeated and comma-separated monomials"""
    monomials = parse_monomials(["x0*x1, x2", "5"], 3)
    assert [g.bits for g in monomials] == [3, 4, 5]


def test_arguments_digest_is_canonical() -> None:
    """Test that keyword order does not change the digest"""
    assert arguments_digest(m=3, k=2) == arguments_digest(k=2, m=3)
    assert arguments_digest(m=3, k=2) != arguments_digest(m=3, k=1)
