## \file relwsd/cascade/scoring.py
# -*- coding: utf-8 -*-
"""
Scoring primitives shared by the heuristics.

Relevance-weighted overlap of a sense s of the word α against a context C:

    score(s) = Σ_{w in C} R(w, α) · freq(w, C) · freq(w, S) · ln(N / d_w)

with S the (expanded) gloss of s, N the number of senses of α and d_w the
number of those senses whose gloss contains w.

Matrix-enriched sense vectors replace a gloss vector v by R·v + v; the
enriched score is the plain dot product with the context frequencies.
"""

import math
import threading
from collections import Counter
from typing import Callable, Hashable, Iterable, Optional, Sequence

import numpy as np

from relwsd.cascade.instance import DisambiguationInstance
from relwsd.corpus.model import PosTag
from relwsd.lexicon.model import Lexicon, SenseEntry
from relwsd.lexicon.taxonomy import expand_gloss
from relwsd.logger.exceptions import HashMismatchError
from relwsd.relmatrix.relevance import RelevanceMatrix
from relwsd.relmatrix.vocabulary import Vocabulary

SenseVector = dict[str, float]

_COMPATIBLE_PAIRS = {
    (PosTag.NOUN, PosTag.NOUN),
    (PosTag.NOUN, PosTag.VERB),
    (PosTag.NOUN, PosTag.ADJ),
    (PosTag.VERB, PosTag.VERB),
    (PosTag.VERB, PosTag.ADV),
}
POS_COMPATIBLE = frozenset(_COMPATIBLE_PAIRS | {(b, a) for a, b in _COMPATIBLE_PAIRS})


def pos_compatible(a: Optional[PosTag], b: Optional[PosTag]) -> bool:
    """Untagged words are compatible with anything; OTHER with nothing."""
    if a is None or b is None:
        return True
    return (a, b) in POS_COMPATIBLE


def term_frequencies(tokens: Iterable[str]) -> SenseVector:
    return {w: float(c) for w, c in Counter(tokens).items()}


def context_counts(inst: DisambiguationInstance, radius: Optional[int] = None, pos_compat: bool = False) -> Counter:
    """freq(w, C): token counts of the context around the target, target excluded."""
    counts: Counter[str] = Counter()
    for _, token in inst.context_lemmas(radius):
        if pos_compat and inst.pos is not None and not pos_compatible(inst.pos, token.pos_tag):
            continue
        counts[token.lemma] += 1
    return counts


class LemmaRelevance:
    """R(w, α) addressed by lemma; words outside the vocabulary relate to nothing."""

    def __init__(self, matrix: RelevanceMatrix, vocab: Vocabulary):
        if matrix.vocab_hash != vocab.content_hash:
            raise HashMismatchError("relevance matrix was built over a different vocabulary")
        self.matrix = matrix
        self.vocab = vocab

    def __call__(self, w: str, alpha: str) -> float:
        a, b = self.vocab.id_of(w), self.vocab.id_of(alpha)
        if a is None or b is None:
            return 0.0
        return self.matrix.relevance(a, b)


class UniformRelevance:
    """Every R entry replaced by 1: plain idf-weighted cooccurrence counting."""

    def __call__(self, w: str, alpha: str) -> float:
        return 1.0


Relevance = Callable[[str, str], float]


def inverse_sense_frequencies(vectors: Sequence[SenseVector]) -> dict[str, float]:
    """ln(N / d_w) for every word present in at least one of the N sense vectors."""
    n = len(vectors)
    df: Counter[str] = Counter()
    for v in vectors:
        df.update(w for w, x in v.items() if x)
    return {w: math.log(n / d) for w, d in df.items()}


def relevance_score(counts: Counter, alpha: str, vector: SenseVector, idf: dict[str, float], relevance: Relevance) -> float:
    total = 0.0
    for w, freq_c in counts.items():
        freq_s = vector.get(w, 0.0)
        weight = idf.get(w, 0.0)
        if not freq_s or not weight:
            continue
        total += relevance(w, alpha) * freq_c * freq_s * weight
    return total


def gloss_vectors(senses: Sequence[SenseEntry], lex: Lexicon, depth: int) -> list[SenseVector]:
    return [term_frequencies(expand_gloss(s, lex, depth)) for s in senses]


def score_relevance(
    inst: DisambiguationInstance,
    sense_tokens: Sequence[str],
    relevance: Relevance,
    lex: Lexicon,
    expand_depth: int = 0,
) -> float:
    """Relevance-weighted overlap of `sense_tokens` with the whole context of `inst`.

    The idf factor comes from the glosses of every sense of the instance's
    lemma, expanded to `expand_depth`. A lemma missing from the lexicon scores 0.

    Example:
        >>> score_relevance(inst, ["w"], lambda w, a: 4.0, lex)  # w twice in C, in 1 of 2 glosses
        5.545177444479562
    """
    entry = lex.lookup(inst.lemma, inst.pos)
    if entry is None:
        return 0.0
    idf = inverse_sense_frequencies(gloss_vectors(entry.senses, lex, expand_depth))
    return relevance_score(context_counts(inst), inst.lemma, term_frequencies(sense_tokens), idf, relevance)


def build_supervised_vectors(sense: SenseEntry, gloss_tokens: Optional[Sequence[str]] = None) -> SenseVector:
    """tf(gloss) + (1/m) Σ tf(example_i) over the m training examples of the sense.

    The gloss and the examples taken together weigh the same.
    """
    vector = term_frequencies(sense.gloss if gloss_tokens is None else gloss_tokens)
    m = len(sense.example_vectors)
    for example in sense.example_vectors:
        for w, c in Counter(example).items():
            vector[w] = vector.get(w, 0.0) + c / m
    return {w: x for w, x in vector.items() if x}


def enrich_vector(v: SenseVector, matrix: RelevanceMatrix, vocab: Vocabulary) -> SenseVector:
    """R·v + v over the vocabulary; entries of v outside the vocabulary pass through unchanged.

    Example:
        >>> enrich_vector({"a": 1.0}, matrix_with_a_b_4, vocab)
        {'b': 4.0, 'a': 1.0}
    """
    if matrix.vocab_size != len(vocab):
        raise HashMismatchError("relevance matrix and vocabulary sizes differ")
    x = np.zeros(len(vocab), dtype=np.float64)
    for w, weight in v.items():
        i = vocab.id_of(w)
        if i is not None:
            x[i] += weight
    result: SenseVector = {}
    if x.any():
        y = matrix.symmetric @ x
        for i in np.nonzero(y)[0].tolist():
            result[vocab.lemma(i)] = float(y[i])
    for w, weight in v.items():
        result[w] = result.get(w, 0.0) + weight
    return {w: x for w, x in result.items() if x}


def dot(counts: Counter, vector: SenseVector) -> float:
    return sum(c * vector.get(w, 0.0) for w, c in counts.items())


class EnrichmentCache:
    """Thread-safe memo of computed vectors.

    Two threads computing the same key store equal values, so a lost race
    only repeats work.
    """

    def __init__(self):
        self._data: dict[Hashable, object] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._data)

    def get_or_compute(self, key: Hashable, compute: Callable[[], object]):
        with self._lock:
            if key in self._data:
                return self._data[key]
        value = compute()
        with self._lock:
            return self._data.setdefault(key, value)
