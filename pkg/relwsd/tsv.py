## \file relwsd/tsv.py
# -*- coding: utf-8 -*-
"""
Module for tab-separated artifact files.

Every TSV artifact written by the package starts with `# key=value` metadata
lines followed by plain rows. This module provides:
    - save_tsv: write metadata header lines and rows.
    - read_tsv: read the rows into a pandas DataFrame of strings.
    - read_header: parse the `# key=value` metadata lines.

Example usage:
    >>> save_tsv([("dog", 12), ("cat", 7)], "vocab.tsv", {"kind": "vocabulary"})
    >>> read_tsv("vocab.tsv", ["lemma", "frequency"]).to_dict(orient="records")
    [{'lemma': 'dog', 'frequency': '12'}, {'lemma': 'cat', 'frequency': '7'}]
"""

import csv
from pathlib import Path
from typing import Iterable, Optional, Sequence

import pandas as pd


def format_header(meta: Optional[dict]) -> list[str]:
    """Render metadata as `# key=value` lines in key order."""
    return [f"# {key}={meta[key]}" for key in sorted(meta or {})]


def save_tsv(rows: Iterable[Sequence], file_path: str | Path, meta: Optional[dict] = None) -> Path:
    """Save rows to a TSV file, preceded by metadata header lines.

    Args:
        rows (Iterable[Sequence]): Rows; every field is written with `str()`.
        file_path (str | Path): Destination file.
        meta (dict, optional): Header metadata.

    Returns:
        Path: The written path.
    """
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        for line in format_header(meta):
            f.write(line + "\n")
        for row in rows:
            f.write("\t".join(str(field) for field in row) + "\n")
    return path


def read_header(file_path: str | Path) -> dict[str, str]:
    """Parse the leading `# key=value` lines of a TSV artifact.

    Example:
        >>> read_header("vocab.tsv")
        {'kind': 'vocabulary'}
    """
    meta: dict[str, str] = {}
    with Path(file_path).open("r", encoding="utf-8") as f:
        for line in f:
            if not line.startswith("#"):
                break
            key, sep, value = line[1:].strip().partition("=")
            if sep:
                meta[key.strip()] = value.strip()
    return meta


def read_tsv(file_path: str | Path, names: list[str], min_fields: Optional[int] = None) -> pd.DataFrame:
    """Load a TSV artifact into a DataFrame of strings.

    Metadata lines are skipped and no value is coerced to NaN, so lemmas such
    as `null` or `NA` survive the round trip. Rows may carry fewer fields than
    `names` (trailing optional columns); missing fields read as "".

    Args:
        file_path (str | Path): Path to the TSV file.
        names (list[str]): Column names.
        min_fields (int, optional): Rows with fewer fields raise `ValueError`. Defaults to all columns.

    Returns:
        pd.DataFrame: One row per data line.
    """
    skip, has_rows = _scan_header(file_path)
    if not has_rows:
        return pd.DataFrame({name: pd.Series(dtype=str) for name in names})
    df = pd.read_csv(
        file_path,
        sep="\t",
        names=names,
        header=None,
        comment=None,
        dtype=str,
        na_filter=False,
        quoting=csv.QUOTE_NONE,
        skip_blank_lines=True,
        skiprows=skip,
    ).fillna("")
    required = len(names) if min_fields is None else min_fields
    if required and len(df):
        missing = df[names[required - 1]] == ""
        if missing.any():
            bad = int(missing.idxmax())
            raise ValueError(f"{file_path}: data row {bad + 1} has fewer than {required} fields")
    return df


def _scan_header(file_path: str | Path) -> tuple[int, bool]:
    """Count leading metadata lines and report whether any data line follows."""
    count = 0
    with Path(file_path).open("r", encoding="utf-8") as f:
        for line in f:
            if line.startswith("#"):
                count += 1
                continue
            if line.strip():
                return count, True
    return count, False
