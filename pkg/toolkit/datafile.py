"""
Exact integer matrices shipped as JSON in corpus/data.

A data file holds {"schema", "name", "description", "matrices", "sha256"}.
"matrices" maps a key to a list of rows of decimal strings; "sha256" maps the
same key to the digest of the rows written as comma-separated integers joined
by "\\n". Every matrix is checked against its digest when it is read.
"""

import hashlib
import json
from functools import cache
from pathlib import Path
from typing import Any, Sequence

import constants
from toolkit.errors import ChecksumError, MissingCorpusError, ParseError, SchemaError
from units import to_integer
from utils.local_logger import LocalLogger

log = LocalLogger("DataFile")

IntRows = tuple[tuple[int, ...], ...]


def rows_checksum(rows: Sequence[Sequence[int]]) -> str:
    text = "\n".join(",".join(str(x) for x in row) for row in rows)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _decode_rows(value: Any, where: str) -> IntRows:
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise SchemaError(f"{where}: expected a list of rows.")
    try:
        return tuple(tuple(to_integer(x) for x in row) for row in value)
    except (TypeError, ValueError) as e:
        raise SchemaError(f"{where}: {e}") from None


def read_matrices(path: Path) -> dict[str, IntRows]:
    """
    Reads and verifies every matrix in a data file.

    :raises MissingCorpusError: if the file does not exist
    :raises ParseError: if the file is not JSON
    :raises SchemaError: if the document has the wrong shape
    :raises ChecksumError: if a matrix does not match its digest
    """
    if not path.is_file():
        raise MissingCorpusError(f"Data file {path} does not exist.")
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ParseError(f"{path}: invalid JSON ({e}).") from None
    if not isinstance(document, dict) or document.get("schema") != constants.SCHEMA:
        raise SchemaError(f"{path.name}: expected a {constants.SCHEMA} data document.")
    matrices, digests = document.get("matrices"), document.get("sha256")
    if not isinstance(matrices, dict) or not isinstance(digests, dict):
        raise SchemaError(f"{path.name}: needs \"matrices\" and \"sha256\" objects.")

    result = {}
    for key, value in matrices.items():
        rows = _decode_rows(value, f"{path.name}: {key}")
        if key not in digests:
            raise ChecksumError(f"{path.name}: {key} has no recorded sha256.")
        if rows_checksum(rows) != digests[key]:
            raise ChecksumError(f"{path.name}: {key} does not match its recorded sha256.")
        result[key] = rows
    log.debug(f"Read {', '.join(result)} from {path.name}")
    return result


@cache
def load_matrices(filename: str) -> dict[str, IntRows]:
    """
    The verified matrices of a file in constants.DATA_DIR.
    """
    return read_matrices(constants.DATA_DIR / filename)
