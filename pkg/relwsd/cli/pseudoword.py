## \file relwsd/cli/pseudoword.py
# -*- coding: utf-8 -*-
"""
Pseudoword benchmarks.

Two unrelated words `a` and `b` are merged into the artificial ambiguous
word `a_b`. The documents of a normalized corpus are split (seeded) into a
training and a held-out slice:

- the training slice, with both words conflated, is written out as token
  streams so that a matrix containing `a_b` can be built from it;
- every occurrence of `a` or `b` in the held-out slice becomes an instance of
  `a_b`, and the gold standard records which word was really there;
- the lexicon gets one `a_b` entry with a sense per source word, glossed by
  the words that cooccur most with that source word in the (unconflated)
  training slice, with relative frequencies taken from the training slice.

Output directory:

    train/<doc_id>.tsv
    instances.jsonl
    gold.txt
    lexicon.json
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from relwsd.cascade.instance import DisambiguationInstance, write_instances
from relwsd.corpus.model import Label, PosTag, Token
from relwsd.corpus.pipeline import STREAM_SUFFIX, TokenStream, write_token_stream
from relwsd.evaluation.gold import GoldStandard, write_gold
from relwsd.lexicon.loader import dump_lexicon
from relwsd.lexicon.model import Lexicon, LexiconEntry, SenseEntry
from relwsd.logger import logger
from relwsd.logger.exceptions import PseudowordError
from relwsd.relmatrix.cooccurrence import count_cooccurrences
from relwsd.relmatrix.relevance import mutual_information
from relwsd.relmatrix.vocabulary import Vocabulary, build_vocabulary

MIN_OCCURRENCES = 5
GLOSS_SIZE = 20
CONTEXT_RADIUS = 30

TRAIN_DIR = "train"
INSTANCES_FILE = "instances.jsonl"
GOLD_FILE = "gold.txt"
LEXICON_FILE = "lexicon.json"


@dataclass
class PseudowordTask:
    word_a: str
    word_b: str
    instances: list[DisambiguationInstance]
    gold: GoldStandard
    lexicon: Lexicon
    training: list[TokenStream]
    holdout_ids: list[str]

    @property
    def pseudoword(self) -> str:
        return pseudoword_of(self.word_a, self.word_b)

    def sense_key(self, word: str) -> str:
        return sense_key_of(self.pseudoword, word)


def pseudoword_of(word_a: str, word_b: str) -> str:
    return f"{word_a}_{word_b}"


def sense_key_of(pseudoword: str, word: str) -> str:
    return f"{pseudoword}%{word}"


def split_documents(doc_ids: Sequence[str], holdout: float, seed: int) -> tuple[list[str], list[str]]:
    """Seeded split of document ids into (training, held-out), both sorted and non-empty.

    Raises:
        PseudowordError: Fewer than two documents, or `holdout` outside (0, 1).
    """
    if not 0 < holdout < 1:
        raise PseudowordError(f"holdout must lie in (0, 1), got {holdout}")
    ids = sorted(doc_ids)
    if len(ids) < 2:
        raise PseudowordError("a pseudoword split needs at least two documents")
    order = np.random.default_rng(seed).permutation(len(ids))
    n_holdout = min(max(int(round(holdout * len(ids))), 1), len(ids) - 1)
    held = {ids[i] for i in order[:n_holdout]}
    return [d for d in ids if d not in held], [d for d in ids if d in held]


def conflate(tokens: Sequence[Token], words: set[str], pseudoword: str) -> list[Token]:
    """Replace every token whose lemma is in `words` by the pseudoword."""
    return [t.with_lemma(pseudoword) if t.lemma in words else t for t in tokens]


def gloss_words(counts, vocab: Vocabulary, word: str, exclude: set[str], size: int, threshold: float) -> list[str]:
    """Words that cooccur most often with `word` among those whose relevance reaches `threshold`."""
    target = vocab.id_of(word)
    rows, cols, raw = mutual_information(counts)
    joint = np.asarray(counts.pair[rows, cols]).ravel()
    mask = ((rows == target) | (cols == target)) & (raw >= threshold)
    partners = np.where(rows[mask] == target, cols[mask], rows[mask])
    ranked = sorted(
        zip(partners.tolist(), joint[mask].tolist(), raw[mask].tolist()),
        key=lambda item: (-item[1], -item[2], vocab.lemma(item[0])),
    )
    gloss = []
    for partner, _, _ in ranked:
        lemma = vocab.lemma(partner)
        if lemma in exclude or lemma in (Label.NUMBER, Label.PROPER_NOUN):
            continue
        gloss.append(lemma)
        if len(gloss) == size:
            break
    return gloss


def _instances(stream: TokenStream, sources: set[str], pseudoword: str, radius: int) -> list[tuple[DisambiguationInstance, str]]:
    conflated = conflate(stream.tokens, sources, pseudoword)
    doc = "_".join(stream.doc_id.split())
    found = []
    for i, token in enumerate(stream.tokens):
        if token.lemma not in sources:
            continue
        lo, hi = max(0, i - radius), min(len(conflated), i + radius + 1)
        context = tuple(t.with_position(j) for j, t in enumerate(conflated[lo:hi]))
        inst = DisambiguationInstance(f"{doc}.t{token.position}", pseudoword, PosTag.NOUN, context, i - lo)
        found.append((inst, token.lemma))
    return found


def build_pseudoword_task(
    streams: Sequence[TokenStream],
    word_a: str,
    word_b: str,
    holdout: float = 0.2,
    seed: int = 0,
    vocab_size: int = 20000,
    radius: int = 30,
    threshold: float = 2.0,
    gloss_size: int = GLOSS_SIZE,
    context_radius: int = CONTEXT_RADIUS,
    min_count: int = MIN_OCCURRENCES,
) -> PseudowordTask:
    """Build a pseudoword benchmark from normalized token streams.

    Args:
        streams (Sequence[TokenStream]): The normalized corpus.
        word_a (str): First source lemma.
        word_b (str): Second source lemma.
        holdout (float): Share of documents held out for instances.
        seed (int): Split seed.
        vocab_size (int): Vocabulary size of the gloss-selection counts.
        radius (int): Window radius of the gloss-selection counts.
        threshold (float): Minimum relevance of a gloss word.
        gloss_size (int): Gloss words per sense.
        context_radius (int): Context tokens kept on each side of an instance.
        min_count (int): Minimum training occurrences of each source word.

    Returns:
        PseudowordTask: Instances, gold standard, lexicon and conflated training streams.

    Raises:
        PseudowordError: Equal words, a bad split, or a source word too rare in the training slice.
    """
    if word_a == word_b:
        raise PseudowordError("the two source words must differ")
    pseudoword = pseudoword_of(word_a, word_b)
    sources = {word_a, word_b}
    by_id = {s.doc_id: s for s in streams}
    train_ids, holdout_ids = split_documents(list(by_id), holdout, seed)
    training = [by_id[d] for d in train_ids]

    frequency = {w: sum(1 for s in training for t in s.tokens if t.lemma == w) for w in (word_a, word_b)}
    for word, n in frequency.items():
        if n < min_count:
            logger.error(f"'{word}' occurs {n} times in the training slice", None, False)
            raise PseudowordError(f"'{word}' occurs {n} times in the training slice, below the minimum of {min_count}")

    vocab = build_vocabulary(training, vocab_size)
    for word in (word_a, word_b):
        if word not in vocab:
            raise PseudowordError(f"'{word}' is not among the {vocab_size} most frequent training lemmas")
    counts = count_cooccurrences(training, vocab, radius)

    total = frequency[word_a] + frequency[word_b]
    ordered = sorted((word_a, word_b), key=lambda w: (-frequency[w], w != word_a))
    senses = []
    for rank, word in enumerate(ordered, start=1):
        gloss = gloss_words(counts, vocab, word, sources | {pseudoword}, gloss_size, threshold)
        if not gloss:
            raise PseudowordError(f"no word cooccurs with '{word}' above threshold {threshold}")
        senses.append(SenseEntry(sense_key_of(pseudoword, word), rank, tuple(gloss), frequency[word] / total))
        logger.debug(f"{sense_key_of(pseudoword, word)}: {' '.join(gloss)}")
    lexicon = Lexicon(
        [LexiconEntry(pseudoword, PosTag.NOUN, tuple(senses))],
        provenance=f"pseudoword {pseudoword}, seed {seed}, holdout {holdout}",
    )

    instances: list[DisambiguationInstance] = []
    gold: GoldStandard = {}
    for doc_id in holdout_ids:
        for inst, word in _instances(by_id[doc_id], sources, pseudoword, context_radius):
            instances.append(inst)
            gold[inst.instance_id] = frozenset({sense_key_of(pseudoword, word)})
    conflated = [TokenStream(s.doc_id, conflate(s.tokens, sources, pseudoword), s.meta) for s in training]

    logger.info(
        f"Pseudoword {pseudoword}: {len(train_ids)} training and {len(holdout_ids)} held-out documents, "
        f"{len(instances)} instances"
    )
    return PseudowordTask(word_a, word_b, instances, gold, lexicon, conflated, holdout_ids)


def write_pseudoword_task(task: PseudowordTask, out_dir: str | Path, meta: Optional[dict] = None) -> dict[str, Path]:
    """Write the training streams, instances, gold standard and lexicon under `out_dir`."""
    out = Path(out_dir)
    meta = dict(meta or {})
    stopwords = next((s.meta.get("stopwords") for s in task.training if s.meta.get("stopwords")), None)
    header = {**meta, "pseudoword": task.pseudoword}
    if stopwords:
        header["stopwords"] = stopwords
    for stream in task.training:
        write_token_stream(stream.tokens, out / TRAIN_DIR / f"{stream.doc_id}{STREAM_SUFFIX}", {**header, "doc_id": stream.doc_id})
    paths = {
        "train": out / TRAIN_DIR,
        "instances": out / INSTANCES_FILE,
        "gold": out / GOLD_FILE,
        "lexicon": out / LEXICON_FILE,
    }
    write_instances(task.instances, paths["instances"], header)
    write_gold(task.gold, paths["gold"])
    dump_lexicon(task.lexicon, paths["lexicon"])
    return paths
