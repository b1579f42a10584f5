## \file relwsd/cascade/__init__.py
# -*- coding: utf-8 -*-
""" Heuristic cascades """

from .instance import DisambiguationInstance, instance_from_record, read_instances, write_instances
from .verdict import CascadeResult, Outcome, TraceStep, Verdict
from .scoring import (
    EnrichmentCache,
    LemmaRelevance,
    UniformRelevance,
    build_supervised_vectors,
    enrich_vector,
    pos_compatible,
    score_relevance,
)
from .heuristics import (
    HEURISTICS,
    CascadeContext,
    h_enriched,
    h_first_sense,
    h_monosemous,
    h_relevance_filter,
    h_statistical,
    resolve_params,
)
from .dsl import CascadeSpec, Step, format_spec, load_cascade, parse_cascade
from .runner import answers_of, format_trace, run_all, run_cascade, run_cascades
