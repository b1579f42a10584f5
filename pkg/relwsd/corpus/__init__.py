## \file relwsd/corpus/__init__.py
# -*- coding: utf-8 -*-
""" Raw text to normalized token streams """

from .model import Label, PosTag, RawDocument, StopwordList, Token
from .lemmatizer import IdentityLemmatizer, Lemmatizer, SuffixLemmatizer, get_lemmatizer
from .boilerplate import is_english, strip_boilerplate
from .normalizer import Normalizer, tokenize, tokenize_and_normalize
from .pipeline import (
    Diagnostics,
    TokenStream,
    iter_token_streams,
    normalize_corpus,
    normalize_documents,
    read_token_stream,
    stream_files,
    stream_stopwords_hash,
    write_token_stream,
)
