## \file relwsd/lexicon/taxonomy.py
# -*- coding: utf-8 -*-
"""Hyponym expansion of glosses."""

from collections import deque

from relwsd.lexicon.model import Lexicon, SenseEntry


def hyponym_closure(sense: SenseEntry, lex: Lexicon, depth: int) -> list[SenseEntry]:
    """The sense followed by every hyponym at most `depth` steps below it, breadth-first, each once."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    found = [sense]
    seen = {sense.sense_key}
    queue = deque([(sense, 0)])
    while queue:
        current, level = queue.popleft()
        if level == depth:
            continue
        for key in current.hyponym_keys:
            if key in seen:
                continue
            seen.add(key)
            hyponym = lex.sense(key)
            if hyponym is None:
                continue
            found.append(hyponym)
            queue.append((hyponym, level + 1))
    return found


def expand_gloss(sense: SenseEntry, lex: Lexicon, depth: int) -> list[str]:
    """Own gloss followed by the glosses of the hyponyms within `depth` levels.

    Example:
        >>> expand_gloss(lex.sense("s"), lex, 0) == list(lex.sense("s").gloss)
        True
    """
    tokens: list[str] = []
    for entry in hyponym_closure(sense, lex, depth):
        tokens.extend(entry.gloss)
    return tokens
