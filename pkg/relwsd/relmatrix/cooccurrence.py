## \file relwsd/relmatrix/cooccurrence.py
# -*- coding: utf-8 -*-
"""
Windowed cooccurrence counting.

Every token position p of a document is the centre of a window covering
positions [p - radius, p + radius], clipped to the document. A word is
counted once per window that contains it, however often it appears there;
a pair once per window that contains both. Out-of-vocabulary tokens occupy
positions but are never counted.

For a batch of window centres the counter builds a 0/1 sparse matrix
M (centres x vocabulary); column sums of M are the window counts of each word
and the strict upper triangle of MᵀM the pair counts.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy import sparse

from relwsd.corpus.pipeline import read_token_stream
from relwsd.logger import logger
from relwsd.logger.exceptions import CountsMismatchError
from relwsd.relmatrix.vocabulary import Stream, Vocabulary, stream_lemmas

BATCH_CENTRES = 20000
PROGRESS_EVERY = 1000


@dataclass
class CoocCounts:
    """Window and pair counts of a corpus.

    `occ[a]` counts windows containing word a; `pair` is an upper-triangular
    sparse matrix with `pair[a, b]` (a < b) the windows containing both.
    """

    window_radius: int
    vocab_hash: str
    total_positions: int
    occ: np.ndarray
    pair: sparse.csr_matrix

    @property
    def vocab_size(self) -> int:
        return len(self.occ)

    def occ_count(self, a: int) -> int:
        return int(self.occ[a])

    def pair_count(self, a: int, b: int) -> int:
        if a == b:
            return 0
        a, b = min(a, b), max(a, b)
        return int(self.pair[a, b])

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Counted pairs `(a, b, count)` with a < b, in (a, b) order."""
        coo = self.pair.tocoo()
        order = np.lexsort((coo.col, coo.row))
        for a, b, count in zip(coo.row[order], coo.col[order], coo.data[order]):
            if count:
                yield int(a), int(b), int(count)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoocCounts):
            return NotImplemented
        return (
            self.window_radius == other.window_radius
            and self.vocab_hash == other.vocab_hash
            and self.total_positions == other.total_positions
            and np.array_equal(self.occ, other.occ)
            and self.pair.shape == other.pair.shape
            and (self.pair != other.pair).nnz == 0
        )


def encode_stream(vocab: Vocabulary, stream: Stream) -> np.ndarray:
    """Vocabulary ids of a stream, -1 for words outside the vocabulary."""
    index = vocab.index
    return np.fromiter((index.get(lemma, -1) for lemma in stream_lemmas(stream)), dtype=np.int64)


def _window_matrix(ids: np.ndarray, start: int, stop: int, radius: int, size: int) -> sparse.csr_matrix:
    """0/1 matrix of the words present in the windows centred at start..stop-1."""
    n = len(ids)
    lo, hi = max(0, start - radius), min(n, stop + radius)
    positions = np.nonzero(ids[lo:hi] >= 0)[0] + lo
    offsets = np.arange(-radius, radius + 1)
    centres = positions[:, None] + offsets[None, :]
    cols = np.broadcast_to(ids[positions][:, None], centres.shape)
    keep = (centres >= start) & (centres < stop)
    rows, cols = centres[keep] - start, cols[keep]
    m = sparse.coo_matrix(
        (np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(stop - start, size)
    ).tocsr()
    m.sum_duplicates()
    m.data[:] = 1
    return m


def _count_encoded(docs: Sequence[np.ndarray], radius: int, size: int) -> tuple[int, np.ndarray, sparse.csr_matrix]:
    total = 0
    occ = np.zeros(size, dtype=np.int64)
    pair = sparse.csr_matrix((size, size), dtype=np.int64)
    for k, ids in enumerate(docs, start=1):
        n = len(ids)
        total += n
        if size == 0:
            continue
        for start in range(0, n, BATCH_CENTRES):
            m = _window_matrix(ids, start, min(n, start + BATCH_CENTRES), radius, size)
            occ += np.asarray(m.sum(axis=0)).ravel()
            pair = pair + sparse.triu(m.T @ m, k=1, format="csr")
        if k % PROGRESS_EVERY == 0:
            logger.info(f"Counted {k} documents, {total} positions")
    return total, occ, pair.tocsr()


def count_cooccurrences(streams: Iterable[Stream], vocab: Vocabulary, radius: int) -> CoocCounts:
    """Count windows and window pairs over every document.

    Args:
        streams (Iterable[Stream]): Normalized documents; windows never cross them.
        vocab (Vocabulary): Words to count.
        radius (int): Window radius (a window spans 2 * radius + 1 positions).

    Returns:
        CoocCounts: `total_positions` is the number of tokens, OOV included.

    Example:
        >>> c = count_cooccurrences([["a", "b"]], build_vocabulary([["a", "b"]], 10), 30)
        >>> c.total_positions, c.occ_count(0), c.pair_count(0, 1)
        (2, 2, 2)
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    encoded = (encode_stream(vocab, s) for s in streams)
    total, occ, pair = _count_encoded(encoded, radius, len(vocab))
    return CoocCounts(radius, vocab.content_hash, total, occ, pair)


def _count_shard(args: tuple[list[np.ndarray], int, int]) -> tuple[int, np.ndarray, sparse.csr_matrix]:
    return _count_encoded(*args)


def count_cooccurrences_parallel(streams: Iterable[Stream], vocab: Vocabulary, radius: int, jobs: int = 1) -> CoocCounts:
    """`count_cooccurrences` over document shards in worker processes, merged with `merge_counts`."""
    if jobs <= 1:
        return count_cooccurrences(streams, vocab, radius)
    if radius < 1:
        raise ValueError("radius must be >= 1")
    docs = [encode_stream(vocab, s) for s in streams]
    shards = [(docs[i::jobs], radius, len(vocab)) for i in range(jobs)]
    logger.info(f"Counting {len(docs)} documents in {jobs} shards")
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        parts = [
            CoocCounts(radius, vocab.content_hash, total, occ, pair)
            for total, occ, pair in executor.map(_count_shard, shards)
        ]
    return merge_counts(parts)


def _count_files(args: tuple[list[Path], Vocabulary, int]) -> CoocCounts:
    paths, vocab, radius = args
    return count_cooccurrences((read_token_stream(path) for path in paths), vocab, radius)


def count_stream_files(paths: Sequence[Path], vocab: Vocabulary, radius: int, jobs: int = 1) -> CoocCounts:
    """Count token-stream files, each read by the worker that counts it.

    Only one document per worker is in memory at a time; the result equals
    `count_cooccurrences` over the same streams.

    Args:
        paths (Sequence[Path]): Stream files, see `relwsd.corpus.pipeline.stream_files`.
        vocab (Vocabulary): Words to count.
        radius (int): Window radius.
        jobs (int): Worker processes; files are dealt round-robin.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    paths = list(paths)
    if jobs <= 1:
        return _count_files((paths, vocab, radius))
    logger.info(f"Counting {len(paths)} stream files in {jobs} shards")
    shards = [(paths[i::jobs], vocab, radius) for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        parts = list(executor.map(_count_files, shards))
    return merge_counts(parts)


def merge_counts(parts: Sequence[CoocCounts]) -> CoocCounts:
    """Fieldwise sum of counts taken over disjoint sets of documents.

    Raises:
        CountsMismatchError: Parts with different radius or vocabulary, or no parts.
    """
    if not parts:
        raise CountsMismatchError("nothing to merge")
    first = parts[0]
    total, occ, pair = 0, np.zeros_like(first.occ), sparse.csr_matrix(first.pair.shape, dtype=np.int64)
    for part in parts:
        if part.window_radius != first.window_radius:
            raise CountsMismatchError(f"window radius {part.window_radius} differs from {first.window_radius}")
        if part.vocab_hash != first.vocab_hash or part.occ.shape != first.occ.shape:
            raise CountsMismatchError("counts were taken with different vocabularies")
        total += part.total_positions
        occ = occ + part.occ
        pair = pair + part.pair
    return CoocCounts(first.window_radius, first.vocab_hash, total, occ, pair.tocsr())
