## \file relwsd/jjson.py
# -*- coding: utf-8 -*-
"""
Module for handling JSON and JSON-lines files.

This module provides functions to:
- **Dump JSON data**: write dicts, lists or SimpleNamespace objects deterministically (sorted keys, UTF-8).
- **Load JSON data**: read JSON from a path or a string, raising `JsonLoadError` with the line and column of the first problem.
- **Convert to SimpleNamespace**: load JSON as SimpleNamespace objects for attribute access (configuration files).
- **JSON-lines**: read and write one JSON value per line (disambiguation instances).
"""

import json
from pathlib import Path
from types import SimpleNamespace
from typing import Any, Iterable, Iterator, Optional

from relwsd.logger import logger
from relwsd.logger.exceptions import JsonLoadError


def _to_plain(data: Any) -> Any:
    """Convert SimpleNamespace instances to dictionaries recursively."""
    if isinstance(data, SimpleNamespace):
        return {key: _to_plain(value) for key, value in vars(data).items()}
    if isinstance(data, (list, tuple)):
        return [_to_plain(item) for item in data]
    if isinstance(data, dict):
        return {key: _to_plain(value) for key, value in data.items()}
    return data


def dict2ns(data: Any) -> Any:
    """Recursively convert dictionaries to SimpleNamespace objects."""
    if isinstance(data, dict):
        return SimpleNamespace(**{key: dict2ns(value) for key, value in data.items()})
    if isinstance(data, list):
        return [dict2ns(item) for item in data]
    return data


def j_dumps(
    data: dict | list | SimpleNamespace,
    file_path: Optional[str | Path] = None,
    indent: Optional[int] = 2,
) -> str:
    """Serialize data to JSON text and optionally write it to a file.

    Output is deterministic: keys sorted, non-ASCII kept, trailing newline.

    Args:
        data (dict | list | SimpleNamespace): JSON-compatible data or SimpleNamespace objects.
        file_path (str | Path, optional): Output file. If None, only the text is returned.
        indent (int, optional): Indentation; None gives one line. Defaults to 2.

    Returns:
        str: The JSON text that was (or would be) written.

    Examples:
        >>> j_dumps({"b": 1, "a": 2})
        '{\\n  "a": 2,\\n  "b": 1\\n}\\n'
    """
    text = json.dumps(_to_plain(data), ensure_ascii=False, sort_keys=True, indent=indent) + "\n"
    if file_path is not None:
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    return text


def j_loads(jjson: str | Path | dict | list) -> Any:
    """Load JSON data from a file path or a JSON string.

    Args:
        jjson (str | Path | dict | list): A `Path` to a file, JSON text, or already-loaded data.

    Returns:
        Any: The decoded value.

    Raises:
        JsonLoadError: If the file is missing or the text is not valid JSON.

    Examples:
        >>> j_loads('{"key": "value"}')
        {'key': 'value'}
    """
    if isinstance(jjson, (dict, list)):
        return jjson

    if isinstance(jjson, Path):
        source = str(jjson)
        try:
            text = jjson.read_text(encoding="utf-8")
        except FileNotFoundError as ex:
            logger.error(f"File not found: {jjson}", ex, exc_info=False)
            raise JsonLoadError(source, "file not found") from ex
    else:
        source, text = "<string>", jjson

    try:
        return json.loads(text)
    except json.JSONDecodeError as ex:
        logger.error(f"Invalid JSON in {source}", ex, exc_info=False)
        raise JsonLoadError(source, ex.msg, ex.lineno, ex.colno) from ex


def j_loads_ns(jjson: str | Path | dict | list) -> Any:
    """Load JSON data and convert every object to SimpleNamespace.

    Examples:
        >>> j_loads_ns('{"radius": 30}').radius
        30
    """
    return dict2ns(j_loads(jjson))


def j_loads_lines(file_path: str | Path) -> Iterator[tuple[int, Any]]:
    """Yield `(line_number, value)` for every non-blank line of a JSON-lines file.

    Raises:
        JsonLoadError: On the first line that is not valid JSON.
    """
    path = Path(file_path)
    with path.open("r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                yield lineno, json.loads(line)
            except json.JSONDecodeError as ex:
                logger.error(f"Invalid JSON line in {path}", ex, exc_info=False)
                raise JsonLoadError(path, ex.msg, lineno, ex.colno) from ex


def j_dumps_lines(records: Iterable[Any], file_path: str | Path) -> int:
    """Write one compact JSON value per line. Returns the number of lines written."""
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", encoding="utf-8") as f:
        for record in records:
            f.write(json.dumps(_to_plain(record), ensure_ascii=False, sort_keys=True) + "\n")
            count += 1
    return count
