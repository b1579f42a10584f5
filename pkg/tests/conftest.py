## \file tests/conftest.py
# -*- coding: utf-8 -*-
"""
Shared fixtures.

`toy_dir` is the hand-built end-to-end fixture with checked-in expected
outputs. `synthetic_documents` writes seeded text with two topical registers
(finance around "money", landscape around "river") scattered through neutral
filler prose; filler words are consonant-vowel strings that no stopword,
exception or suffix rule touches, so every word is its own lemma.
"""

import itertools
import random
from pathlib import Path

import pytest

from relwsd.cascade.heuristics import CascadeContext
from relwsd.cascade.instance import DisambiguationInstance, read_instances
from relwsd.config import RunConfig
from relwsd.corpus.model import RawDocument, StopwordList
from relwsd.corpus.normalizer import Normalizer
from relwsd.corpus.pipeline import TokenStream, normalize_documents
from relwsd.lexicon.loader import load_lexicon
from relwsd.relmatrix.cooccurrence import count_cooccurrences
from relwsd.relmatrix.relevance import build_relevance
from relwsd.relmatrix.vocabulary import build_vocabulary

FIXTURES = Path(__file__).parent / "fixtures"
TOY = FIXTURES / "toy"
# Public-domain prose: King James chapters and United States founding documents
TEXTS = FIXTURES / "texts"

CONSONANTS = "bdfgklmnprtvz"
VOWELS = "aiou"
FINANCE = (
    "loan", "credit", "deposit", "cash", "coin", "debt", "profit", "wage",
    "budget", "tax", "invoice", "account", "payment", "market", "trade",
)
LANDSCAPE = (
    "stream", "shore", "flood", "valley", "bridge", "boat", "canal", "rain",
    "lake", "pond", "water", "mud", "rock", "island", "harbor",
)
REGISTERS = (("money", FINANCE), ("river", LANDSCAPE))

# Lemma streams of the normalized toy corpus
TOY_STREAMS = [
    ["bank", "money", "loan"],
    ["bank", "money"],
    ["river", "water", "fish"],
    ["river", "water"],
    ["sun"],
]


def filler_words(n: int = 400, seed: int = 7) -> list[str]:
    words = ["".join(p) for p in itertools.product(CONSONANTS, VOWELS, CONSONANTS, VOWELS, CONSONANTS)]
    random.Random(seed).shuffle(words)
    return words[:n]


def synthetic_documents(
    n_docs: int = 120,
    segments: int = 40,
    segment_len: int = 20,
    topical_every: int = 12,
    topic_share: float = 0.5,
    seed: int = 0,
) -> dict[str, str]:
    """Seeded documents of `segments` sentences; about one sentence in `topical_every`
    is topical, with its register's target word in the middle."""
    rng = random.Random(seed)
    fillers = filler_words()
    docs = {}
    for d in range(n_docs):
        sentences = []
        for _ in range(segments):
            if rng.randrange(topical_every) == 0:
                target, topic = rng.choice(REGISTERS)
                words = [rng.choice(topic) if rng.random() < topic_share else rng.choice(fillers) for _ in range(segment_len)]
                words[segment_len // 2] = target
            else:
                words = [rng.choice(fillers) for _ in range(segment_len)]
            sentences.append("the " + " ".join(words) + ".")
        docs[f"doc{d:03d}"] = "\n".join(sentences) + "\n"
    return docs


def write_documents(docs: dict[str, str], root: Path) -> Path:
    root.mkdir(parents=True, exist_ok=True)
    for doc_id, text in docs.items():
        (root / f"{doc_id}.txt").write_text(text, encoding="utf-8")
    return root


@pytest.fixture
def toy_dir() -> Path:
    return TOY


@pytest.fixture(scope="session")
def stopwords() -> StopwordList:
    return StopwordList.load()


@pytest.fixture(scope="session")
def synthetic_streams(stopwords) -> list[TokenStream]:
    """The default synthetic corpus, normalized in memory."""
    normalizer = Normalizer(stopwords)
    streams, _ = normalize_documents([RawDocument(d, text) for d, text in synthetic_documents().items()], normalizer)
    meta = {"stopwords": stopwords.content_hash}
    return [TokenStream(doc_id, tokens, {**meta, "doc_id": doc_id}) for doc_id, tokens in sorted(streams.items())]


@pytest.fixture
def toy_context() -> CascadeContext:
    """Toy lexicon with the matrix of the toy corpus, default configuration."""
    vocab = build_vocabulary(TOY_STREAMS, 100)
    matrix = build_relevance(count_cooccurrences(TOY_STREAMS, vocab, 30), threshold=2.0)
    return CascadeContext(load_lexicon(TOY / "lexicon.json"), matrix, vocab, RunConfig())


@pytest.fixture
def toy_instances() -> list[DisambiguationInstance]:
    return read_instances(TOY / "instances.jsonl")[1]
