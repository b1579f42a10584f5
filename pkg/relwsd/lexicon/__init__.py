## \file relwsd/lexicon/__init__.py
# -*- coding: utf-8 -*-
""" Sense inventory, hyponym expansion and multiword detection """

from .multiword import MultiwordIndex, MultiwordMatch, detect_multiwords, load_inflections
from .model import Lexicon, LexiconEntry, SenseEntry
from .loader import dump_lexicon, lexicon_from_data, lexicon_to_data, load_lexicon, validate_lexicon_data
from .taxonomy import expand_gloss, hyponym_closure
