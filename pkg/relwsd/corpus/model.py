## \file relwsd/corpus/model.py
# -*- coding: utf-8 -*-
"""Types shared by the corpus pipeline and everything downstream of it."""

import hashlib
from dataclasses import dataclass
from relwsd._compat import StrEnum
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional


class Label(StrEnum):
    WORD = "WORD"
    NUMBER = "NUMBER"
    PROPER_NOUN = "PROPER_NOUN"


class PosTag(StrEnum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    OTHER = "OTHER"


@dataclass(frozen=True, slots=True)
class RawDocument:
    doc_id: str
    text: str


@dataclass(frozen=True, slots=True)
class Token:
    """One normalized token.

    `position` is the index in the stream after every removal, so a stream of
    n tokens carries positions 0..n-1.
    """

    surface: str
    lemma: str
    label: Label = Label.WORD
    position: int = 0
    pos_tag: Optional[PosTag] = None

    def with_position(self, position: int) -> "Token":
        return Token(self.surface, self.lemma, self.label, position, self.pos_tag)

    def with_lemma(self, lemma: str) -> "Token":
        return Token(lemma, lemma, self.label, self.position, self.pos_tag)


@dataclass(frozen=True)
class StopwordList:
    """Set of lowercase stopword lemmas with a content hash.

    The hash identifies the list version; it is written into every artifact
    derived from normalized text so artifacts built under different lists are
    never combined.
    """

    entries: frozenset[str]

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "StopwordList":
        return cls(frozenset(w.strip().lower() for w in words if w.strip()))

    @classmethod
    def load(cls, path: Optional[str | Path] = None) -> "StopwordList":
        """Read one word per line (`#` starts a comment). `None` loads the bundled English list."""
        if path is None:
            text = resources.files("relwsd.corpus").joinpath("data/stopwords_en.txt").read_text(encoding="utf-8")
        else:
            text = Path(path).read_text(encoding="utf-8")
        return cls.from_words(line.split("#", 1)[0] for line in text.splitlines())

    @property
    def content_hash(self) -> str:
        return hashlib.sha256("\n".join(sorted(self.entries)).encode("utf-8")).hexdigest()

    def __contains__(self, word: object) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)
