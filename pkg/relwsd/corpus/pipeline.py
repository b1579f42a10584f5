## \file relwsd/corpus/pipeline.py
# -*- coding: utf-8 -*-
"""
Corpus runs: raw text tree in, one token-stream file per document out.

A run makes two passes. The first strips boilerplate, drops non-English
documents and collects the lemmas of lowercase words the proper-noun rule needs;
the second normalizes every kept document and writes its stream. Both passes
are per-document and run in worker processes when `jobs > 1`; output does not
depend on `jobs`.

Token-stream file:

    # config=<hash>
    # doc_id=books/alice
    # stopwords=<hash>
    # tool=relwsd 0.1.0
    0	rabbit	WORD
    1	NUMBER	NUMBER
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial
from pathlib import Path
from typing import Iterable, Iterator, Optional

from relwsd.corpus.model import Label, PosTag, RawDocument, Token
from relwsd.corpus.normalizer import Normalizer, lowercase_lemmas
from relwsd.file import decode_text, read_text_file, recursive_get_filenames
from relwsd.jjson import j_dumps
from relwsd.logger import logger
from relwsd.logger.exceptions import DataError, HashMismatchError
from relwsd.tsv import read_header, read_tsv, save_tsv

STREAM_SUFFIX = ".tsv"
DIAGNOSTICS_FILE = "diagnostics.json"
PROGRESS_EVERY = 500


@dataclass
class Diagnostics:
    """Per-run tallies; partial tallies from workers add up."""

    documents_kept: int = 0
    documents_dropped: int = 0
    tokens: int = 0
    undecodable: int = 0

    def __add__(self, other: "Diagnostics") -> "Diagnostics":
        return Diagnostics(
            self.documents_kept + other.documents_kept,
            self.documents_dropped + other.documents_dropped,
            self.tokens + other.tokens,
            self.undecodable + other.undecodable,
        )

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TokenStream:
    doc_id: str
    tokens: list[Token]
    meta: dict


def write_token_stream(tokens: Iterable[Token], file_path: str | Path, meta: Optional[dict] = None) -> Path:
    """Write `position<TAB>lemma<TAB>label[<TAB>pos_tag]` lines after the metadata header."""
    rows = (
        (t.position, t.lemma, t.label.value) + ((t.pos_tag.value,) if t.pos_tag else ())
        for t in tokens
    )
    return save_tsv(rows, file_path, meta)


def read_token_stream(file_path: str | Path) -> TokenStream:
    """Read a token-stream file back. Surfaces are not stored, so `surface == lemma`."""
    path = Path(file_path)
    meta = read_header(path)
    try:
        df = read_tsv(path, ["position", "lemma", "label", "pos_tag"], min_fields=3)
        tokens = [
            Token(lemma, lemma, Label(label), int(position), PosTag(pos_tag) if pos_tag else None)
            for position, lemma, label, pos_tag in df.itertuples(index=False, name=None)
        ]
    except ValueError as ex:
        logger.error(f"Malformed token stream {path}", ex, exc_info=False)
        raise DataError(f"{path}: malformed token stream: {ex}") from ex
    return TokenStream(meta.get("doc_id", path.stem), tokens, meta)


def stream_files(stream_dir: str | Path) -> list[Path]:
    """Token-stream files under `stream_dir`, in path order."""
    return recursive_get_filenames(stream_dir, f"*{STREAM_SUFFIX}")


def iter_token_streams(stream_dir: str | Path, stopwords_hash: Optional[str] = None) -> Iterator[TokenStream]:
    """Yield every stream under `stream_dir` in path order.

    All streams must carry the same stopword hash (the first stream's, unless
    `stopwords_hash` is given).

    Raises:
        HashMismatchError: A stream was normalized under another stopword list.
    """
    expected = stopwords_hash
    for path in stream_files(stream_dir):
        stream = read_token_stream(path)
        found = stream.meta.get("stopwords")
        if expected is None:
            expected = found
        elif found != expected:
            raise HashMismatchError(f"{path}: stopword list {found} differs from {expected}")
        yield stream


def stream_stopwords_hash(stream_dir: str | Path) -> Optional[str]:
    """Stopword hash recorded by a normalization run, `None` if the directory holds no streams."""
    for path in stream_files(stream_dir):
        return read_header(path).get("stopwords")
    return None


def _doc_id(root: Path, path: Path) -> str:
    return path.relative_to(root).with_suffix("").as_posix()


def _first_pass(normalizer: Normalizer, root: Path, path: Path) -> tuple[bool, int, set[str]]:
    text, skipped = read_text_file(path)
    doc = normalizer.prepare(RawDocument(_doc_id(root, path), text))
    if doc is None:
        logger.debug(f"{path}: dropped, not English")
        return False, skipped, set()
    return True, skipped, lowercase_lemmas(doc.text, normalizer.lemmatizer)


def _second_pass(normalizer: Normalizer, root: Path, out_dir: Path, meta: dict, path: Path) -> int:
    text, _ = read_text_file(path)
    doc = normalizer.prepare(RawDocument(_doc_id(root, path), text))
    tokens = normalizer.normalize(doc)
    write_token_stream(tokens, out_dir / f"{doc.doc_id}{STREAM_SUFFIX}", {**meta, "doc_id": doc.doc_id})
    return len(tokens)


def _map(fn, items: list, jobs: int) -> Iterator:
    if jobs <= 1:
        return map(fn, items)
    executor = ProcessPoolExecutor(max_workers=jobs)
    try:
        # list() forces completion before the pool shuts down
        return iter(list(executor.map(fn, items, chunksize=max(1, len(items) // (jobs * 8)))))
    finally:
        executor.shutdown()


def normalize_corpus(
    corpus_dir: str | Path,
    out_dir: str | Path,
    normalizer: Normalizer,
    meta: Optional[dict] = None,
    jobs: int = 1,
) -> Diagnostics:
    """Normalize every `*.txt` file under `corpus_dir` into `out_dir`.

    Args:
        corpus_dir (str | Path): Root of the raw text tree.
        out_dir (str | Path): Receives `<doc_id>.tsv` streams and `diagnostics.json`.
        normalizer (Normalizer): Stopwords, lemmatizer, markers and threshold.
        meta (dict, optional): Extra header metadata (tool version, config hash).
        jobs (int): Worker processes.

    Returns:
        Diagnostics: Kept/dropped documents, tokens written, undecodable sequences.
    """
    root, out = Path(corpus_dir), Path(out_dir)
    files = recursive_get_filenames(root, "*.txt")
    logger.info(f"Normalizing {len(files)} files from {root} with {jobs} job(s)")

    diagnostics = Diagnostics()
    kept: list[Path] = []
    for i, (path, (is_kept, skipped, forms)) in enumerate(
        zip(files, _map(partial(_first_pass, normalizer, root), files, jobs)), start=1
    ):
        diagnostics.undecodable += skipped
        if is_kept:
            kept.append(path)
            normalizer.known_lemmas |= forms
        else:
            diagnostics.documents_dropped += 1
        if i % PROGRESS_EVERY == 0:
            logger.info(f"First pass: {i}/{len(files)} documents")

    header = {**(meta or {}), "stopwords": normalizer.stopwords.content_hash}
    for i, count in enumerate(_map(partial(_second_pass, normalizer, root, out, header), kept, jobs), start=1):
        diagnostics.documents_kept += 1
        diagnostics.tokens += count
        if i % PROGRESS_EVERY == 0:
            logger.info(f"Second pass: {i}/{len(kept)} documents")

    j_dumps({**diagnostics.to_dict(), "stopwords_hash": normalizer.stopwords.content_hash}, out / DIAGNOSTICS_FILE)
    logger.success(
        f"Kept {diagnostics.documents_kept} documents, dropped {diagnostics.documents_dropped}, "
        f"{diagnostics.tokens} tokens"
    )
    return diagnostics


def normalize_documents(docs: Iterable[RawDocument | tuple[str, bytes]], normalizer: Normalizer) -> tuple[dict[str, list[Token]], Diagnostics]:
    """In-memory variant of `normalize_corpus` for documents already loaded.

    Documents may be given as raw bytes (`(doc_id, data)`), which are decoded
    with undecodable sequences dropped and counted.
    """
    diagnostics = Diagnostics()
    prepared: list[RawDocument] = []
    for item in docs:
        if isinstance(item, RawDocument):
            doc = item
        else:
            text, skipped = decode_text(item[1])
            diagnostics.undecodable += skipped
            doc = RawDocument(item[0], text)
        ready = normalizer.prepare(doc)
        if ready is None:
            diagnostics.documents_dropped += 1
        else:
            prepared.append(ready)
    normalizer.learn(prepared)

    streams: dict[str, list[Token]] = {}
    for doc in prepared:
        streams[doc.doc_id] = normalizer.normalize(doc)
        diagnostics.documents_kept += 1
        diagnostics.tokens += len(streams[doc.doc_id])
    return streams, diagnostics
