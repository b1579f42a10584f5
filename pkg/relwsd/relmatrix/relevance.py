## \file relwsd/relmatrix/relevance.py
# -*- coding: utf-8 -*-
"""
The relevance matrix.

For two vocabulary words a and b, with T window positions in the corpus,

    raw(a, b) = P(a and b) / (P(a) P(b)) = pair(a, b) * T / (occ(a) * occ(b))

and a cell is kept only when `raw >= threshold`. Everything below the
threshold reads as 0, so no retrievable value lies strictly between 0 and the
threshold. Cells are stored once per unordered pair, as sorted (a, b, weight)
arrays with a < b.
"""

import hashlib
import threading
from typing import Iterator, Optional

import numpy as np
from scipy import sparse

from relwsd.logger import logger
from relwsd.logger.exceptions import EmptyCorpusError, VocabularyError
from relwsd.relmatrix.cooccurrence import CoocCounts
from relwsd.relmatrix.vocabulary import Vocabulary


class RelevanceMatrix:
    """Immutable symmetric matrix of thresholded mutual-information weights.

    Args:
        rows (np.ndarray): Smaller id of each cell.
        cols (np.ndarray): Larger id of each cell.
        weights (np.ndarray): Cell weights, all >= `threshold`.
        vocab_size (int): Number of ids the matrix is defined over.
        vocab_hash (str): Hash of the vocabulary the ids refer to.
        threshold (float): Cut-off the cells were selected with.
        radius (int): Window radius of the counts.
        total_positions (int): T of the counts.
        stopwords_hash (str, optional): Stopword list the corpus was normalized with.
        config (str, optional): Hash of the run configuration that built the matrix.
    """

    def __init__(
        self,
        rows: np.ndarray,
        cols: np.ndarray,
        weights: np.ndarray,
        vocab_size: int,
        vocab_hash: str,
        threshold: float,
        radius: int = 0,
        total_positions: int = 0,
        stopwords_hash: Optional[str] = None,
        config: Optional[str] = None,
    ):
        order = np.lexsort((cols, rows))
        self.rows = np.ascontiguousarray(np.asarray(rows, dtype=np.uint32)[order])
        self.cols = np.ascontiguousarray(np.asarray(cols, dtype=np.uint32)[order])
        self.weights = np.ascontiguousarray(np.asarray(weights, dtype=np.float64)[order])
        if np.any(self.rows >= self.cols):
            raise ValueError("cells must satisfy id_a < id_b")
        if len(self.cols) and int(self.cols.max()) >= vocab_size:
            raise ValueError("cell id outside the vocabulary")
        self.vocab_size = int(vocab_size)
        self.vocab_hash = vocab_hash
        self.threshold = float(threshold)
        self.radius = int(radius)
        self.total_positions = int(total_positions)
        self.stopwords_hash = stopwords_hash
        self.config = config
        self._indptr = np.searchsorted(self.rows, np.arange(self.vocab_size + 1), side="left")
        self._symmetric: Optional[sparse.csr_matrix] = None
        self._neighbours: dict[int, dict[int, float]] = {}
        self._lock = threading.Lock()
        self._hash: Optional[str] = None

    def __len__(self) -> int:
        return len(self.weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelevanceMatrix):
            return NotImplemented
        return self.metadata() == other.metadata() and (
            np.array_equal(self.rows, other.rows)
            and np.array_equal(self.cols, other.cols)
            and self.weights.tobytes() == other.weights.tobytes()
        )

    def metadata(self) -> dict:
        return {
            "vocab_size": self.vocab_size,
            "vocab_hash": self.vocab_hash,
            "threshold": self.threshold,
            "radius": self.radius,
            "total_positions": self.total_positions,
            "stopwords_hash": self.stopwords_hash,
            "config": self.config,
        }

    def _check(self, vocab_id: int) -> None:
        if not 0 <= vocab_id < self.vocab_size:
            raise VocabularyError(f"vocabulary id {vocab_id} out of range 0..{self.vocab_size - 1}")

    def relevance(self, a: int, b: int) -> float:
        """Weight of the pair, 0.0 when no cell is stored; relevance(a, a) is 0."""
        self._check(a)
        self._check(b)
        if a == b:
            return 0.0
        a, b = min(a, b), max(a, b)
        start, stop = self._indptr[a], self._indptr[a + 1]
        i = start + int(np.searchsorted(self.cols[start:stop], b))
        if i < stop and self.cols[i] == b:
            return float(self.weights[i])
        return 0.0

    def cells(self) -> Iterator[tuple[int, int, float]]:
        for a, b, w in zip(self.rows.tolist(), self.cols.tolist(), self.weights.tolist()):
            yield a, b, w

    @property
    def symmetric(self) -> sparse.csr_matrix:
        """Both triangles as a csr matrix, for matrix-vector products."""
        if self._symmetric is None:
            with self._lock:
                if self._symmetric is None:
                    upper = sparse.coo_matrix(
                        (self.weights, (self.rows, self.cols)), shape=(self.vocab_size, self.vocab_size)
                    )
                    self._symmetric = (upper + upper.T).tocsr()
        return self._symmetric

    def neighbours(self, vocab_id: int) -> dict[int, float]:
        """Every stored cell of one word as `{other_id: weight}`. Cached; the returned dict must not be modified."""
        self._check(vocab_id)
        cached = self._neighbours.get(vocab_id)
        if cached is not None:
            return cached
        sym = self.symmetric
        start, stop = sym.indptr[vocab_id], sym.indptr[vocab_id + 1]
        row = dict(zip(sym.indices[start:stop].tolist(), sym.data[start:stop].tolist()))
        with self._lock:
            self._neighbours[vocab_id] = row
        return row

    def scaled(self, factor: float) -> "RelevanceMatrix":
        """Matrix with every weight and the threshold multiplied by `factor`."""
        if factor <= 0:
            raise ValueError("scale factor must be > 0")
        return RelevanceMatrix(
            self.rows, self.cols, self.weights * factor, self.vocab_size, self.vocab_hash,
            self.threshold * factor, self.radius, self.total_positions, self.stopwords_hash, self.config,
        )

    @property
    def content_hash(self) -> str:
        """Identifies the matrix in caches keyed by matrix."""
        if self._hash is not None:
            return self._hash
        h = hashlib.sha256()
        h.update(f"{self.vocab_hash}\n{self.threshold!r}\n{self.vocab_size}\n".encode("utf-8"))
        for array in (self.rows, self.cols, self.weights):
            h.update(array.astype(array.dtype.newbyteorder("<"), copy=False).tobytes())
        self._hash = h.hexdigest()
        return self._hash


def mutual_information(counts: CoocCounts) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Raw weights of every counted pair before thresholding, as `(rows, cols, raw)`.

    Raises:
        EmptyCorpusError: `counts.total_positions` is 0.
    """
    if counts.total_positions == 0:
        raise EmptyCorpusError("empty corpus")
    coo = counts.pair.tocoo()
    keep = coo.data > 0
    rows, cols, joint = coo.row[keep], coo.col[keep], coo.data[keep]
    occ = counts.occ.astype(np.float64)
    raw = joint.astype(np.float64) * float(counts.total_positions) / (occ[rows] * occ[cols])
    return rows, cols, raw


def build_relevance(
    counts: CoocCounts,
    threshold: float = 2.0,
    stopwords_hash: Optional[str] = None,
    config: Optional[str] = None,
) -> RelevanceMatrix:
    """Turn cooccurrence counts into a thresholded relevance matrix.

    Args:
        counts (CoocCounts): Window counts.
        threshold (float): Minimum stored weight, > 0.
        stopwords_hash (str, optional): Recorded in the matrix metadata.
        config (str, optional): Recorded in the matrix metadata.

    Returns:
        RelevanceMatrix: Cells with `raw >= threshold`.

    Raises:
        EmptyCorpusError: No positions were counted.
    """
    if threshold <= 0:
        raise ValueError("threshold must be > 0")
    rows, cols, raw = mutual_information(counts)
    keep = raw >= threshold
    logger.info(f"Relevance matrix: {int(keep.sum())} of {len(raw)} counted pairs reach threshold {threshold}")
    return RelevanceMatrix(
        rows[keep], cols[keep], raw[keep], counts.vocab_size, counts.vocab_hash, threshold,
        counts.window_radius, counts.total_positions, stopwords_hash, config,
    )


def relevance(matrix: RelevanceMatrix, a: int, b: int) -> float:
    """Functional form of `RelevanceMatrix.relevance`."""
    return matrix.relevance(a, b)


def top_related(matrix: RelevanceMatrix, vocab: Vocabulary, lemma: str, k: int = 10) -> list[tuple[str, float]]:
    """The `k` heaviest neighbours of `lemma`, heaviest first, ties by lemma."""
    vocab_id = vocab.id_of(lemma)
    if vocab_id is None:
        raise VocabularyError(f"'{lemma}' is not in the vocabulary")
    row = matrix.neighbours(vocab_id)
    ranked = sorted(((vocab.lemma(b), w) for b, w in row.items()), key=lambda item: (-item[1], item[0]))
    return ranked[:k]
