## \file relwsd/evaluation/baselines.py
# -*- coding: utf-8 -*-
"""
Reference systems every cascade is compared against.

Both skip instances whose lemma the lexicon does not know, the same way a
cascade does.
"""

from typing import Iterable

import numpy as np

from relwsd.cascade.instance import DisambiguationInstance
from relwsd.evaluation.gold import Answer
from relwsd.lexicon.model import Lexicon

RANDOM = "random"
FIRST_SENSE = "first_sense"


def baseline_random(instances: Iterable[DisambiguationInstance], lex: Lexicon, seed: int = 0) -> list[Answer]:
    """Uniform choice among the senses of each instance's lemma.

    Args:
        instances (Iterable[DisambiguationInstance]): Instances in order; the draws follow that order.
        lex (Lexicon): Sense inventory.
        seed (int): Generator seed; the same seed gives the same answers.

    Returns:
        list[Answer]: One answer per instance with a known lemma.
    """
    rng = np.random.default_rng(seed)
    answers = []
    for inst in instances:
        entry = lex.lookup(inst.lemma, inst.pos)
        if entry is None:
            continue
        choice = entry.senses[int(rng.integers(len(entry.senses)))]
        answers.append(Answer(inst.instance_id, choice.sense_key, RANDOM))
    return answers


def baseline_first_sense(instances: Iterable[DisambiguationInstance], lex: Lexicon) -> list[Answer]:
    """The rank-1 sense of every known lemma."""
    answers = []
    for inst in instances:
        entry = lex.lookup(inst.lemma, inst.pos)
        if entry is not None:
            answers.append(Answer(inst.instance_id, entry.first_sense().sense_key, FIRST_SENSE))
    return answers
