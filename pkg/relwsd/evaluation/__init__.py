## \file relwsd/evaluation/__init__.py
# -*- coding: utf-8 -*-
""" Scoring answers against gold standards """

from .gold import Answer, GoldStandard, read_answers, read_gold, write_answers, write_gold
from .report import ComparisonReport, EvalReport, ReportRow, compare_systems, format_table, score_answers
from .baselines import baseline_first_sense, baseline_random
