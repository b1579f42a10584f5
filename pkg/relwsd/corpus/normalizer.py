## \file relwsd/corpus/normalizer.py
# -*- coding: utf-8 -*-
"""
Tokenization and normalization of a single document.

Rules, applied token by token in this order:
    1. punctuation-only tokens are dropped (`.`, `!`, `?` inside them end a sentence);
    2. tokens spelled `NUMBER` or `PROPER_NOUN` keep that label;
    3. numbers (`1984`, `3.14`, `1,000,000`) become `NUMBER`;
    4. words whose lowercase form is a stopword are dropped;
    5. capitalized words become `PROPER_NOUN` unless they open a sentence and
       the lemma of their lowercase form is the lemma of a word seen in
       lowercase elsewhere in the run ("Dogs" opening a sentence is "dog"
       when "dog" or "dogs" occurs lowercase);
    6. everything else is lemmatized, lowercased and dropped if the lemma is a stopword.
Positions are assigned to the surviving tokens only.

Example usage:
    >>> stop = StopwordList.from_words(["in"])
    >>> [t.lemma for t in tokenize_and_normalize(RawDocument("d", "In 1984 Paris fell"), stop)]
    ['NUMBER', 'PROPER_NOUN', 'fall']
"""

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from nltk.tokenize import RegexpTokenizer

from relwsd.corpus.boilerplate import DEFAULT_END_MARKER, DEFAULT_START_MARKER, is_english, strip_boilerplate
from relwsd.corpus.lemmatizer import Lemmatizer, get_lemmatizer
from relwsd.corpus.model import Label, RawDocument, StopwordList, Token

NUMBER_PATTERN = r"(?:\d{1,3}(?:,\d{3})+|\d+)(?:\.\d+)?"
TOKEN_PATTERN = rf"{NUMBER_PATTERN}(?!\w)|\w+(?:['’\-]\w+)*|[^\w\s]+"

_tokenizer = RegexpTokenizer(TOKEN_PATTERN)
_number_re = re.compile(NUMBER_PATTERN)
_punct_re = re.compile(r"[^\w\s]+")
SENTENCE_END = frozenset(".!?")


def tokenize(text: str) -> list[str]:
    """Split text into word, number and punctuation tokens."""
    return _tokenizer.tokenize(text)


def lowercase_lemmas(text: str, lemmatizer: Lemmatizer) -> set[str]:
    """Lemmas of the words that occur starting with a lowercase letter; the proper-noun rule's first pass."""
    return {lemmatizer(tok).lower() for tok in tokenize(text) if tok[0].islower()}


def tokenize_and_normalize(
    doc: RawDocument,
    stopwords: StopwordList,
    lemmatizer: Optional[Lemmatizer] = None,
    known_lemmas: Optional[set[str]] = None,
    initial_words: bool = False,
) -> list[Token]:
    """Normalize one boilerplate-stripped document into a token stream.

    Args:
        doc (RawDocument): Input document.
        stopwords (StopwordList): Words to drop.
        lemmatizer (Lemmatizer, optional): Defaults to the bundled suffix lemmatizer.
        known_lemmas (set[str], optional): Lemmas of the lowercase words of the
            whole run from a first pass. Defaults to the document's own.
        initial_words (bool): Treat every capitalized sentence-initial token as
            an ordinary word (short texts such as glosses).

    Returns:
        list[Token]: Tokens with positions 0..n-1.
    """
    lemmatizer = lemmatizer or get_lemmatizer("suffix")
    pieces = tokenize(doc.text)
    if known_lemmas is None:
        known_lemmas = {lemmatizer(tok).lower() for tok in pieces if tok[0].islower()}

    tokens: list[Token] = []
    sentence_start = True
    for surface in pieces:
        if _punct_re.fullmatch(surface):
            if SENTENCE_END.intersection(surface):
                sentence_start = True
            continue
        initial, sentence_start = sentence_start, False

        if surface in (Label.NUMBER, Label.PROPER_NOUN):
            tokens.append(Token(surface, surface, Label(surface), len(tokens)))
            continue
        if _number_re.fullmatch(surface):
            tokens.append(Token(surface, Label.NUMBER.value, Label.NUMBER, len(tokens)))
            continue
        lower = surface.lower()
        if lower in stopwords:
            continue
        lemma = lemmatizer(lower).lower()
        if surface[0].isupper() and (not initial or (not initial_words and lemma not in known_lemmas)):
            tokens.append(Token(surface, Label.PROPER_NOUN.value, Label.PROPER_NOUN, len(tokens)))
            continue
        if not lemma or lemma in stopwords:
            continue
        tokens.append(Token(surface, lemma, Label.WORD, len(tokens)))
    return tokens


@dataclass
class Normalizer:
    """Everything the per-document pipeline needs, bundled so it can be shipped to worker processes."""

    stopwords: StopwordList
    lemmatizer_name: str = "suffix"
    start_marker: str = DEFAULT_START_MARKER
    end_marker: str = DEFAULT_END_MARKER
    english_threshold: float = 0.02
    known_lemmas: set[str] = field(default_factory=set)

    @classmethod
    def from_config(cls, config) -> "Normalizer":
        return cls(
            stopwords=StopwordList.load(config.stopwords),
            lemmatizer_name=config.lemmatizer,
            start_marker=config.start_marker,
            end_marker=config.end_marker,
            english_threshold=config.english_threshold,
        )

    @property
    def lemmatizer(self) -> Lemmatizer:
        return get_lemmatizer(self.lemmatizer_name)

    def prepare(self, doc: RawDocument) -> Optional[RawDocument]:
        """Strip boilerplate; `None` when the document is not English."""
        doc = strip_boilerplate(doc, self.start_marker, self.end_marker)
        if not is_english(doc, self.stopwords, self.english_threshold):
            return None
        return doc

    def learn(self, docs: Iterable[RawDocument]) -> "Normalizer":
        """First pass: collect the lemmas of the lowercase words of prepared documents."""
        for doc in docs:
            self.known_lemmas |= lowercase_lemmas(doc.text, self.lemmatizer)
        return self

    def normalize(self, doc: RawDocument) -> list[Token]:
        return tokenize_and_normalize(doc, self.stopwords, self.lemmatizer, self.known_lemmas or None)

    def normalize_text(self, text: str) -> list[str]:
        """Lemmas of free text such as a gloss; labels of NUMBER/PROPER_NOUN tokens stand in for them."""
        return [t.lemma for t in tokenize_and_normalize(RawDocument("", text), self.stopwords, self.lemmatizer, initial_words=True)]
