import json
import logging
from pathlib import Path
from typing import Any

from exceptions import InputFileError

_logger = logging.getLogger("files")


def read_json_file(path: str | Path) -> Any:
    """Read and parse a JSON file, raising 'InputFileError' with the position of syntax errors"""
    try:
        with open(path, "r") as file:
            content = file.read()
    except OSError as e:
        raise InputFileError(str(path), f"can't be read: {e.strerror}") from e

    try:
        return json.loads(content)
    except json.JSONDecodeError as e:
        raise InputFileError(
            str(path), f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e


def write_json_file(path: str | Path, data: Any) -> None:
    with open(path, "w") as file:
        file.write(json.dumps(data, indent=2, sort_keys=True))
        file.write("\n")
    _logger.info(f"Written '{path}'")


def read_formula_lines(path: str | Path) -> list[str]:
    """Read a text file with one formula per line. Blank lines and lines starting with '#' are
    skipped"""
    try:
        with open(path, "r") as file:
            lines = file.read().splitlines()
    except OSError as e:
        raise InputFileError(str(path), f"can't be read: {e.strerror}") from e
    return [line.strip() for line in lines if line.strip() and not line.lstrip().startswith("#")]
