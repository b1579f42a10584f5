## \file relwsd/relmatrix/codec.py
# -*- coding: utf-8 -*-
"""
Matrix files.

Binary layout (little-endian):

    b"RELWSDRM"                         magic
    u32                                 header length in bytes
    header                              UTF-8 JSON, sorted keys
    u32[cells] id_a, u32[cells] id_b    ids, id_a < id_b, sorted
    f64[cells] weight

The TSV layout carries the same header as `# key=value` lines, then one
`id_a<TAB>id_b<TAB>weight` line per cell. Weights are written with `repr`,
which reads back to the identical float.

`save_matrix`/`load_matrix` pick the TSV codec for a `.tsv` suffix and the
binary codec otherwise.
"""

import json
import struct
from pathlib import Path
from typing import Optional

import numpy as np
from packaging.version import InvalidVersion, Version

from relwsd.logger import logger
from relwsd.logger.exceptions import HashMismatchError, MatrixFormatError
from relwsd.relmatrix.relevance import RelevanceMatrix
from relwsd.relmatrix.vocabulary import Vocabulary
from relwsd.tsv import read_header, read_tsv, save_tsv
from relwsd.version import __format_version__, __version__

MAGIC = b"RELWSDRM"
_INT_FIELDS = ("vocab_size", "radius", "total_positions", "cells")


def _header(matrix: RelevanceMatrix, extra: Optional[dict]) -> dict:
    return {
        "tool": f"relwsd {__version__}",
        **(extra or {}),
        **{k: v for k, v in matrix.metadata().items() if v is not None},
        "format_version": __format_version__,
        "cells": len(matrix),
    }


def _check_version(path: Path, header: dict) -> None:
    try:
        found = Version(str(header.get("format_version", "")))
    except InvalidVersion as ex:
        raise MatrixFormatError(f"{path}: bad format_version '{header.get('format_version')}'") from ex
    current = Version(__format_version__)
    if found.major != current.major or found > current:
        raise MatrixFormatError(f"{path}: format version {found} cannot be read by format {current}")


def _from_header(path: Path, header: dict, rows, cols, weights) -> RelevanceMatrix:
    _check_version(path, header)
    try:
        matrix = RelevanceMatrix(
            rows, cols, weights,
            vocab_size=int(header["vocab_size"]),
            vocab_hash=str(header["vocab_hash"]),
            threshold=float(header["threshold"]),
            radius=int(header.get("radius", 0)),
            total_positions=int(header.get("total_positions", 0)),
            stopwords_hash=header.get("stopwords_hash") or None,
            config=header.get("config") or None,
        )
    except (KeyError, ValueError, TypeError) as ex:
        raise MatrixFormatError(f"{path}: {ex}") from ex
    if len(matrix) != int(header.get("cells", len(matrix))):
        raise MatrixFormatError(f"{path}: header announces {header['cells']} cells, body holds {len(matrix)}")
    if len(matrix) and float(matrix.weights.min()) < matrix.threshold:
        raise MatrixFormatError(f"{path}: cell below threshold {matrix.threshold}")
    return matrix


def save_matrix_binary(matrix: RelevanceMatrix, file_path: str | Path, meta: Optional[dict] = None) -> Path:
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = json.dumps(_header(matrix, meta), sort_keys=True, ensure_ascii=False).encode("utf-8")
    with path.open("wb") as f:
        f.write(MAGIC)
        f.write(struct.pack("<I", len(header)))
        f.write(header)
        f.write(matrix.rows.astype("<u4").tobytes())
        f.write(matrix.cols.astype("<u4").tobytes())
        f.write(matrix.weights.astype("<f8").tobytes())
    return path


def load_matrix_binary(file_path: str | Path) -> RelevanceMatrix:
    path = Path(file_path)
    data = path.read_bytes()
    if not data.startswith(MAGIC) or len(data) < len(MAGIC) + 4:
        raise MatrixFormatError(f"{path}: not a relevance matrix file")
    (length,) = struct.unpack_from("<I", data, len(MAGIC))
    start = len(MAGIC) + 4
    try:
        header = json.loads(data[start:start + length].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as ex:
        raise MatrixFormatError(f"{path}: unreadable header: {ex}") from ex
    body = data[start + length:]
    cells = int(header.get("cells", -1))
    if cells < 0 or len(body) != cells * 16:
        raise MatrixFormatError(f"{path}: body is {len(body)} bytes, expected {max(cells, 0) * 16}")
    rows = np.frombuffer(body, dtype="<u4", count=cells, offset=0)
    cols = np.frombuffer(body, dtype="<u4", count=cells, offset=cells * 4)
    weights = np.frombuffer(body, dtype="<f8", count=cells, offset=cells * 8)
    return _from_header(path, header, rows, cols, weights)


def save_matrix_tsv(matrix: RelevanceMatrix, file_path: str | Path, meta: Optional[dict] = None) -> Path:
    header = _header(matrix, meta)
    header["threshold"] = repr(matrix.threshold)
    rows = ((a, b, repr(w)) for a, b, w in matrix.cells())
    return save_tsv(rows, file_path, header)


def load_matrix_tsv(file_path: str | Path) -> RelevanceMatrix:
    path = Path(file_path)
    header: dict = read_header(path)
    for key in _INT_FIELDS:
        if key in header:
            header[key] = int(header[key])
    try:
        df = read_tsv(path, ["id_a", "id_b", "weight"])
        rows = df["id_a"].astype(np.int64).to_numpy()
        cols = df["id_b"].astype(np.int64).to_numpy()
        weights = df["weight"].astype(np.float64).to_numpy()
    except ValueError as ex:
        raise MatrixFormatError(f"{path}: malformed cell line: {ex}") from ex
    return _from_header(path, header, rows, cols, weights)


def save_matrix(matrix: RelevanceMatrix, file_path: str | Path, meta: Optional[dict] = None) -> Path:
    """Write a matrix; `.tsv` selects the text codec.

    Args:
        matrix (RelevanceMatrix): Matrix to save.
        file_path (str | Path): Destination.
        meta (dict, optional): Extra header fields (tool, config hash).
    """
    path = Path(file_path)
    writer = save_matrix_tsv if path.suffix.lower() == ".tsv" else save_matrix_binary
    writer(matrix, path, meta)
    logger.info(f"Saved {len(matrix)} cells to {path}")
    return path


def load_matrix(file_path: str | Path, vocab: Optional[Vocabulary] = None) -> RelevanceMatrix:
    """Read a matrix written by `save_matrix`.

    Args:
        file_path (str | Path): Matrix file.
        vocab (Vocabulary, optional): When given, the matrix must have been built over it.

    Raises:
        MatrixFormatError: Bad magic, version, header or body.
        HashMismatchError: `vocab` is not the matrix's vocabulary.
    """
    path = Path(file_path)
    try:
        matrix = load_matrix_tsv(path) if path.suffix.lower() == ".tsv" else load_matrix_binary(path)
    except MatrixFormatError as ex:
        logger.error(f"Cannot load matrix {path}", ex, exc_info=False)
        raise
    if vocab is not None and (vocab.content_hash != matrix.vocab_hash or len(vocab) != matrix.vocab_size):
        raise HashMismatchError(f"{path}: matrix was built over a different vocabulary")
    return matrix
