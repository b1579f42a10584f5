## \file relwsd/lexicon/model.py
# -*- coding: utf-8 -*-
"""Sense inventory types."""

from dataclasses import dataclass, field
from typing import Iterator, Optional

from relwsd.corpus.model import PosTag
from relwsd.lexicon.multiword import MultiwordIndex

LEXICON_POS = (PosTag.NOUN, PosTag.VERB, PosTag.ADJ, PosTag.ADV)


@dataclass(frozen=True)
class SenseEntry:
    """One sense of a lemma.

    `gloss` and `example_vectors` hold normalized lemmas; `gloss_text` and
    `examples_text` keep the source text (when the file gave text) so the
    lexicon can be written back unchanged.
    """

    sense_key: str
    rank: int
    gloss: tuple[str, ...]
    rel_freq: float
    hyponym_keys: tuple[str, ...] = ()
    example_vectors: tuple[tuple[str, ...], ...] = ()
    gloss_text: Optional[str] = None
    examples_text: Optional[tuple[str, ...]] = None


@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    pos: PosTag
    senses: tuple[SenseEntry, ...]

    @property
    def is_monosemous(self) -> bool:
        return len(self.senses) == 1

    def first_sense(self) -> SenseEntry:
        return self.senses[0]


@dataclass
class Lexicon:
    """Entries by (lemma, pos) plus a sense-key index. Read-only once built."""

    entries: list[LexiconEntry]
    provenance: Optional[str] = None
    multiwords: Optional[MultiwordIndex] = field(default=None, compare=False)
    _by_key: dict[str, SenseEntry] = field(init=False, repr=False, compare=False)
    _by_lemma: dict[str, list[LexiconEntry]] = field(init=False, repr=False, compare=False)
    _owner: dict[str, LexiconEntry] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._by_key = {s.sense_key: s for e in self.entries for s in e.senses}
        self._owner = {s.sense_key: e for e in self.entries for s in e.senses}
        self._by_lemma = {}
        for entry in self.entries:
            self._by_lemma.setdefault(entry.lemma, []).append(entry)
        for same in self._by_lemma.values():
            same.sort(key=lambda e: LEXICON_POS.index(e.pos))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self.entries)

    def __contains__(self, lemma: object) -> bool:
        return lemma in self._by_lemma

    def lookup(self, lemma: str, pos: Optional[PosTag | str] = None) -> Optional[LexiconEntry]:
        """Entry for `lemma`; with no `pos`, or a pos the lemma lacks, the first of NOUN, VERB, ADJ, ADV."""
        candidates = self._by_lemma.get(lemma)
        if not candidates:
            return None
        if pos:
            for entry in candidates:
                if entry.pos == pos:
                    return entry
        return candidates[0]

    def sense(self, sense_key: str) -> Optional[SenseEntry]:
        return self._by_key.get(sense_key)

    def owner(self, sense_key: str) -> Optional[LexiconEntry]:
        return self._owner.get(sense_key)
