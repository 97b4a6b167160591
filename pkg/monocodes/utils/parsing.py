import hashlib
import json
import logging
from collections.abc import Iterable
from pathlib import Path

from pydantic import ValidationError

from monocodes.core.exceptions import ChannelError, InvalidInputError
from monocodes.domain.channel import SymmetricChannel, from_table, make_bec, make_bsc
from monocodes.domain.enums import ChannelKind
from monocodes.domain.monomial import Monomial, parse_monomial
from monocodes.schemas.channel import ChannelTable

logger = logging.getLogger(__name__)


def load_channel_table(path: str | Path) -> SymmetricChannel:
    """
    Load a channel from a JSON table file.

    Args:
        path: File holding {"alphabet": [...], "p0": [...], "p1": [...], "involution": [...]}

    Returns:
        The validated channel

    Raises:
        InvalidInputError: If the file cannot be read or parsed
        ChannelError: If the table is not a symmetric channel
    """
    file_path = Path(path)
    try:
        table = ChannelTable.model_validate_json(file_path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InvalidInputError(f"cannot read channel table {file_path}: {e}") from e
    except ValidationError as e:
        raise ChannelError(f"malformed channel table {file_path}: {e.errors()[0]['msg']}") from e
    logger.debug(f"Loaded channel table {file_path} with {len(table.p0)} outputs")
    return from_table(table.p0, table.p1, table.involution, table.alphabet)


def parse_channel_spec(spec: str) -> SymmetricChannel:
    """Parse "bec:<p>", "bsc:<p>" or "table:<path>"."""
    kind_text, sep, argument = spec.partition(":")
    if not sep or not argument:
        raise InvalidInputError(f"channel spec {spec!r} must look like bec:<p>, bsc:<p> or table:<path>")
    try:
        kind = ChannelKind(kind_text.strip().lower())
    except ValueError as e:
        raise InvalidInputError(f"unknown channel family {kind_text!r}") from e

    if kind is ChannelKind.TABLE:
        return load_channel_table(argument)
    try:
        p = float(argument)
    except ValueError as e:
        raise InvalidInputError(f"channel parameter {argument!r} is not a number") from e
    return make_bec(p) if kind is ChannelKind.BEC else make_bsc(p)


def parse_monomials(texts: Iterable[str], m: int) -> list[Monomial]:
    """Parse each text; a single text may also hold a comma-separated list."""
    result: list[Monomial] = []
    for text in texts:
        for piece in text.split(","):
            if piece.strip():
                result.append(parse_monomial(piece, m))
    return result


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def arguments_digest(**arguments: object) -> str:
    """sha256 of the canonical JSON form of the arguments."""
    canonical = json.dumps(arguments, sort_keys=True, default=str, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
