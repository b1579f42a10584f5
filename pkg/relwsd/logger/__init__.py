## \file relwsd/logger/__init__.py
# -*- coding: utf-8 -*-
""" Logger and exceptions """

from .logger import logger, Logger
from .exceptions import (
    CascadeSyntaxError,
    ConfigError,
    CountsMismatchError,
    DataError,
    EmptyCorpusError,
    GoldStandardError,
    HashMismatchError,
    JsonLoadError,
    LexiconError,
    MatrixFormatError,
    PseudowordError,
    RelwsdError,
    UsageError,
    VocabularyError,
)
