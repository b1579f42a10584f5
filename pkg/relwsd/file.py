## \file relwsd/file.py
# -*- coding: utf-8 -*-
"""
Module for file operations on corpus trees and text artifacts.
"""

import fnmatch
import os
from pathlib import Path
from typing import List

from relwsd.logger import logger

REPLACEMENT_CHAR = "\ufffd"


def save_text_file(data: str | list, file_path: str | Path, mode: str = "w") -> Path:
    """
    Saves the provided data to a file at the specified file path.

    Args:
        data (str | list): Text, or a list of lines written one per line.
        file_path (str | Path): Destination file; parent directories are created.
        mode (str, optional): 'w' overwrites, 'a' appends. Defaults to 'w'.

    Returns:
        Path: The written path.

    Example:
        >>> save_text_file(["a", "b"], "out/lines.txt")
        PosixPath('out/lines.txt')
    """
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    with file_path.open(mode, encoding="utf-8", newline="\n") as file:
        if isinstance(data, list):
            for line in data:
                file.write(f"{line}\n")
        else:
            file.write(data)
    return file_path


def decode_text(raw: bytes) -> tuple[str, int]:
    """Decode UTF-8 bytes, dropping undecodable sequences.

    Returns:
        tuple[str, int]: The text and the number of sequences that were skipped.

    Example:
        >>> decode_text(b"caf\\xe9 ok")
        ('caf ok', 1)
    """
    text = raw.decode("utf-8", errors="replace")
    # Replacement characters already present in valid input are dropped and counted too.
    skipped = text.count(REPLACEMENT_CHAR)
    if skipped:
        text = text.replace(REPLACEMENT_CHAR, "")
    return text, skipped


def read_text_file(file_path: str | Path) -> tuple[str, int]:
    """
    Reads a UTF-8 text file, skipping invalid byte sequences.

    Args:
        file_path (str | Path): Path to the text file.

    Returns:
        tuple[str, int]: File content and the count of skipped sequences.

    Raises:
        FileNotFoundError: If the file does not exist.
    """
    path = Path(file_path)
    text, skipped = decode_text(path.read_bytes())
    if skipped:
        logger.debug(f"{path}: skipped {skipped} undecodable byte sequences")
    return text, skipped


def recursive_get_filenames(root_dir: str | Path, pattern: str | List[str] = "*.txt") -> List[Path]:
    """
    Recursively searches directories and gathers file paths matching the given pattern(s).

    The result is sorted so that corpus runs visit documents in a stable order.

    Args:
        root_dir (str | Path): The root directory to start the search.
        pattern (str | List[str]): Pattern(s) to match file names against (e.g., '*.txt').

    Returns:
        List[Path]: Matching file paths in lexicographic order.

    Example:
        >>> recursive_get_filenames("corpus", "*.txt")
        [PosixPath('corpus/a.txt'), PosixPath('corpus/sub/b.txt')]
    """
    patterns = [pattern] if isinstance(pattern, str) else list(pattern)
    root = Path(root_dir)
    if not root.is_dir():
        logger.warning(f"The root directory '{root}' does not exist or is not a directory.")
        return []

    matches = []
    for dirpath, _, filenames in os.walk(root):
        for filename in filenames:
            if any(fnmatch.fnmatch(filename, p) for p in patterns):
                matches.append(Path(dirpath) / filename)
    return sorted(matches)
