## \file relwsd/relmatrix/__init__.py
# -*- coding: utf-8 -*-
""" Vocabulary, cooccurrence counts and the relevance matrix """

from .vocabulary import Vocabulary, build_vocabulary, load_vocabulary, save_vocabulary, stream_lemmas
from .cooccurrence import (
    CoocCounts,
    count_cooccurrences,
    count_cooccurrences_parallel,
    count_stream_files,
    encode_stream,
    merge_counts,
)
from .relevance import RelevanceMatrix, build_relevance, mutual_information, relevance, top_related
from .codec import load_matrix, save_matrix
