## \file relwsd/relmatrix/vocabulary.py
# -*- coding: utf-8 -*-
"""
The matrix vocabulary: the K most frequent lemmas and labels of a corpus.

Vocabulary file (`lemma<TAB>frequency`, most frequent first):

    # kind=vocabulary
    # size=3
    # tool=relwsd 0.1.0
    NUMBER	120
    money	40
    river	40
"""

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from relwsd.corpus.model import Token
from relwsd.corpus.pipeline import TokenStream
from relwsd.logger import logger
from relwsd.logger.exceptions import MatrixFormatError, VocabularyError
from relwsd.tsv import read_header, read_tsv, save_tsv

Stream = Sequence[Token] | Sequence[str] | TokenStream


def stream_lemmas(stream: Stream) -> list[str]:
    """Lemmas of a stream given as tokens, plain lemmas or a `TokenStream`."""
    if isinstance(stream, TokenStream):
        stream = stream.tokens
    return [t.lemma if isinstance(t, Token) else t for t in stream]


@dataclass
class Vocabulary:
    """Ordered `(lemma, frequency)` entries; the id of a lemma is its index."""

    entries: list[tuple[str, int]]
    index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.entries = [(lemma, int(freq)) for lemma, freq in self.entries]
        self.index = {lemma: i for i, (lemma, _) in enumerate(self.entries)}
        if len(self.index) != len(self.entries):
            raise VocabularyError("vocabulary lists a lemma twice")

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, lemma: object) -> bool:
        return lemma in self.index

    def __iter__(self) -> Iterator[str]:
        return (lemma for lemma, _ in self.entries)

    def id_of(self, lemma: str) -> Optional[int]:
        return self.index.get(lemma)

    def lemma(self, vocab_id: int) -> str:
        self.check_id(vocab_id)
        return self.entries[vocab_id][0]

    def frequency(self, vocab_id: int) -> int:
        self.check_id(vocab_id)
        return self.entries[vocab_id][1]

    def check_id(self, vocab_id: int) -> None:
        if not 0 <= vocab_id < len(self.entries):
            raise VocabularyError(f"vocabulary id {vocab_id} out of range 0..{len(self.entries) - 1}")

    @property
    def content_hash(self) -> str:
        """sha256 of the entry lines; binds matrices to the vocabulary they were counted with."""
        h = hashlib.sha256()
        for lemma, freq in self.entries:
            h.update(f"{lemma}\t{freq}\n".encode("utf-8"))
        return h.hexdigest()


def build_vocabulary(streams: Iterable[Stream], size: int) -> Vocabulary:
    """Pick the `size` most frequent lemmas, ties broken lexicographically.

    Args:
        streams (Iterable[Stream]): Normalized documents.
        size (int): K, the maximum vocabulary size.

    Returns:
        Vocabulary: Possibly smaller than `size`; empty for an empty corpus.

    Example:
        >>> build_vocabulary([["b", "a"]], 2).entries
        [('a', 1), ('b', 1)]
    """
    if size < 1:
        raise ValueError("vocabulary size must be >= 1")
    counts: Counter[str] = Counter()
    for stream in streams:
        counts.update(stream_lemmas(stream))
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))[:size]
    logger.debug(f"Vocabulary: {len(ranked)} of {len(counts)} distinct lemmas kept")
    return Vocabulary(ranked)


def save_vocabulary(vocab: Vocabulary, file_path: str | Path, meta: Optional[dict] = None) -> Path:
    header = {**(meta or {}), "kind": "vocabulary", "size": len(vocab), "vocab_hash": vocab.content_hash}
    return save_tsv(vocab.entries, file_path, header)


def load_vocabulary(file_path: str | Path) -> Vocabulary:
    """Read a vocabulary file; order and frequencies are checked.

    Raises:
        MatrixFormatError: Malformed rows or entries out of order.
    """
    path = Path(file_path)
    try:
        df = read_tsv(path, ["lemma", "frequency"])
        entries = [(lemma, int(freq)) for lemma, freq in df.itertuples(index=False, name=None)]
        vocab = Vocabulary(entries)
    except (ValueError, VocabularyError) as ex:
        logger.error(f"Malformed vocabulary {path}", ex, exc_info=False)
        raise MatrixFormatError(f"{path}: malformed vocabulary: {ex}") from ex
    for i in range(1, len(entries)):
        if (-entries[i - 1][1], entries[i - 1][0]) > (-entries[i][1], entries[i][0]):
            raise MatrixFormatError(f"{path}: entry {i + 1} ('{entries[i][0]}') is out of order")
    recorded = read_header(path).get("vocab_hash")
    if recorded and recorded != vocab.content_hash:
        raise MatrixFormatError(f"{path}: content does not match its recorded vocab_hash")
    return vocab
