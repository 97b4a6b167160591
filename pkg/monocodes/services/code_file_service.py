import hashlib
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from monocodes.core.exceptions import InvalidInputError
from monocodes.domain.code import MonomialCode
from monocodes.schemas.code import CodeDescription

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class LoadedCode:
    code: MonomialCode
    description: CodeDescription
    digest: str


class CodeFileService:
    """
    Service for reading and writing code description files
    """

    def dumps(self, code: MonomialCode, meta: dict[str, Any] | None = None) -> str:
        """Canonical JSON text: monomials ascending, two-space indent, trailing newline."""
        return CodeDescription.from_code(code, meta).model_dump_json(indent=2) + "\n"

    def loads(self, text: str, source: str = "<text>") -> LoadedCode:
        try:
            description = CodeDescription.model_validate_json(text)
        except ValidationError as e:
            first = e.errors()[0]
            location = ".".join(str(part) for part in first["loc"]) or "file"
            raise InvalidInputError(f"malformed code file {source}: {location}: {first['msg']}", "malformed_code_file") from e
        digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
        return LoadedCode(description.to_code(), description, digest)

    def load(self, path: str | Path) -> LoadedCode:
        """
        Read a code description file.

        Args:
            path: JSON file {"m": int, "monomials": [int, ...], "meta": {...}}

        Returns:
            The code, its validated description and the sha256 of the file text

        Raises:
            InvalidInputError: If the file is missing or malformed
        """
        file_path = Path(path)
        try:
            text = file_path.read_text(encoding="utf-8")
        except OSError as e:
            raise InvalidInputError(f"cannot read code file {file_path}: {e}", "unreadable_code_file") from e
        loaded = self.loads(text, str(file_path))
        logger.debug(f"Loaded code file {file_path}: m={loaded.code.m}, dimension={loaded.code.dimension}")
        return loaded

    def save(self, code: MonomialCode, path: str | Path, meta: dict[str, Any] | None = None) -> Path:
        file_path = Path(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_path.write_text(self.dumps(code, meta), encoding="utf-8")
        logger.info(f"Wrote code file {file_path} (m={code.m}, dimension={code.dimension})")
        return file_path
