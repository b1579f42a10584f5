## \file relwsd/__init__.py
# -*- coding: utf-8 -*-
"""
# relwsd

Word sense disambiguation with a corpus-derived relevance matrix.

A raw text corpus is normalized into lemma streams, a mutual-information
relevance matrix is counted over them, and instances are resolved by a
cascade of heuristics (monosemy, sense frequency, relevance-weighted gloss
overlap, first sense) written in a small configuration language. Answers are
scored against gold standards, and pseudoword benchmarks can be generated
from any corpus.
"""

from .version import __version__, __doc__, __details__

from .config import RunConfig, load_config

from .corpus import (
    Normalizer,
    StopwordList,
    Token,
    normalize_corpus,
    read_token_stream,
    write_token_stream,
)

from .relmatrix import (
    RelevanceMatrix,
    Vocabulary,
    build_relevance,
    build_vocabulary,
    count_cooccurrences,
    load_matrix,
    save_matrix,
)

from .lexicon import (
    Lexicon,
    dump_lexicon,
    load_lexicon,
)

from .cascade import (
    CascadeContext,
    DisambiguationInstance,
    parse_cascade,
    run_all,
    run_cascade,
)

from .evaluation import (
    baseline_first_sense,
    baseline_random,
    compare_systems,
    score_answers,
)

from .jjson import (
    j_dumps,
    j_loads,
    j_loads_ns,
)

from .printer import pprint
