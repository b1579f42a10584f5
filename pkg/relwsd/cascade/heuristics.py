## \file relwsd/cascade/heuristics.py
# -*- coding: utf-8 -*-
"""
The disambiguation heuristics and their registry.

Each heuristic takes an instance, the lexicon entry of its lemma, the shared
`CascadeContext` and its resolved parameters, and returns a `Verdict` plus
the per-sense scores it computed (empty for the non-scoring heuristics).

Parameters left out of a cascade program take their value from the run
configuration (radii, cutoff, max_senses, expand_depth) or from the
registry default.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from relwsd.cascade.instance import DisambiguationInstance
from relwsd.cascade.scoring import (
    EnrichmentCache,
    LemmaRelevance,
    UniformRelevance,
    build_supervised_vectors,
    context_counts,
    dot,
    enrich_vector,
    gloss_vectors,
    inverse_sense_frequencies,
    relevance_score,
    term_frequencies,
)
from relwsd.cascade.verdict import Verdict
from relwsd.config import RunConfig
from relwsd.corpus.model import PosTag
from relwsd.lexicon.model import Lexicon, LexiconEntry, SenseEntry
from relwsd.lexicon.taxonomy import expand_gloss
from relwsd.logger.exceptions import UsageError
from relwsd.relmatrix.relevance import RelevanceMatrix
from relwsd.relmatrix.vocabulary import Vocabulary

Scores = dict[str, float]


@dataclass
class CascadeContext:
    """Read-only resources shared by every instance of a run, plus the vector caches."""

    lexicon: Lexicon
    matrix: Optional[RelevanceMatrix] = None
    vocab: Optional[Vocabulary] = None
    config: RunConfig = field(default_factory=RunConfig)
    cache: EnrichmentCache = field(default_factory=EnrichmentCache)
    _relevance: Optional[LemmaRelevance] = field(default=None, init=False, repr=False)

    def relevance(self, heuristic: str) -> LemmaRelevance:
        if self.matrix is None or self.vocab is None:
            raise UsageError(f"heuristic '{heuristic}' needs a relevance matrix and its vocabulary")
        if self._relevance is None:
            self._relevance = LemmaRelevance(self.matrix, self.vocab)
        return self._relevance


@dataclass(frozen=True)
class ParamSpec:
    """Type and default of one heuristic parameter.

    `kind` is one of int, float, bool, choice. `from_config` reads the default
    from the run configuration; `default` applies when that is absent too.
    """

    kind: str
    default: Any = None
    from_config: Optional[Callable[[RunConfig], Any]] = None
    choices: tuple[str, ...] = ()
    check: Optional[Callable[[Any], bool]] = None
    requirement: str = ""

    def parse(self, text: str) -> Any:
        """Typed value of a DSL literal; raises `ValueError` with a readable reason."""
        if self.kind == "int":
            value: Any = int(text)
        elif self.kind == "float":
            value = float(text)
        elif self.kind == "bool":
            lowered = text.lower()
            if lowered in ("on", "true", "yes", "1"):
                value = True
            elif lowered in ("off", "false", "no", "0"):
                value = False
            else:
                raise ValueError(f"expected on or off, got '{text}'")
        else:
            if text not in self.choices:
                raise ValueError(f"expected one of {', '.join(self.choices)}, got '{text}'")
            value = text
        self.validate(value)
        return value

    def validate(self, value: Any) -> None:
        if self.check is not None and not self.check(value):
            raise ValueError(f"must be {self.requirement}")

    def format(self, value: Any) -> str:
        if self.kind == "bool":
            return "on" if value else "off"
        if self.kind == "float":
            return repr(float(value))
        return str(value)

    def resolve(self, config: RunConfig) -> Any:
        if self.from_config is not None:
            return self.from_config(config)
        return self.default


HeuristicFn = Callable[[DisambiguationInstance, LexiconEntry, CascadeContext, dict, str], tuple[Verdict, Scores]]


@dataclass(frozen=True)
class HeuristicDef:
    name: str
    fn: HeuristicFn
    params: dict[str, ParamSpec]
    needs_matrix: Callable[[dict], bool] = lambda params: False


def _rank_argmax(name: str, scored: list[tuple[SenseEntry, float]]) -> Verdict:
    """Highest score wins, lower rank on ties; a best score of 0 abstains."""
    if not scored:
        return Verdict.abstain(name)
    best, score = max(scored, key=lambda item: (item[1], -item[0].rank))
    if score <= 0:
        return Verdict.abstain(name)
    return Verdict.answer(name, best.sense_key, score)


def h_monosemous(inst: DisambiguationInstance, entry: LexiconEntry, ctx: CascadeContext, params: dict, name: str = "monosemous") -> tuple[Verdict, Scores]:
    """The only sense of the lemma, or of a detected multiword covering the target."""
    index = ctx.lexicon.multiwords
    if params.get("multiwords", True) and index is not None and len(index):
        for match in index.detect(inst.context):
            if match.covers(inst.target_index) and len(match.sense_keys) == 1:
                return Verdict.answer(name, next(iter(match.sense_keys))), {}
    if entry.is_monosemous:
        return Verdict.answer(name, entry.first_sense().sense_key), {}
    return Verdict.abstain(name), {}


def h_statistical(inst: DisambiguationInstance, entry: LexiconEntry, ctx: CascadeContext, params: dict, name: str = "statistical") -> tuple[Verdict, Scores]:
    """Drop senses with rel_freq below the cutoff; answer when exactly one is left."""
    survivors = [s for s in entry.senses if s.rel_freq >= params["cutoff"]]
    scores = {s.sense_key: s.rel_freq for s in entry.senses}
    if len(survivors) == 1:
        return Verdict.answer(name, survivors[0].sense_key, survivors[0].rel_freq), scores
    return Verdict.abstain(name), scores


def _radius_for(pos: Optional[PosTag], params: dict) -> int:
    key = f"radius_{(pos or PosTag.NOUN).value.lower()}"
    return params.get(key, params["radius_noun"])


def h_relevance_filter(inst: DisambiguationInstance, entry: LexiconEntry, ctx: CascadeContext, params: dict, name: str = "relevance_filter") -> tuple[Verdict, Scores]:
    """Relevance-weighted gloss overlap over a POS-dependent window, first senses only."""
    candidates = [s for s in entry.senses[: params["max_senses"]] if s.rel_freq >= params["cutoff"]]
    if not candidates:
        return Verdict.abstain(name), {}
    depth, supervised = params["expand_depth"], params["supervised"]
    relevance = UniformRelevance() if params["weighting"] == "uniform" else ctx.relevance(name)

    def vectors():
        if supervised:
            return [build_supervised_vectors(s, expand_gloss(s, ctx.lexicon, depth)) for s in entry.senses]
        return gloss_vectors(entry.senses, ctx.lexicon, depth)

    all_vectors = ctx.cache.get_or_compute(("senses", entry.lemma, entry.pos, depth, supervised), vectors)
    idf = inverse_sense_frequencies(all_vectors)
    by_key = {s.sense_key: v for s, v in zip(entry.senses, all_vectors)}
    counts = context_counts(inst, _radius_for(inst.pos, params), params["pos_compat"])
    scored = [(s, relevance_score(counts, inst.lemma, by_key[s.sense_key], idf, relevance)) for s in candidates]
    return _rank_argmax(name, scored), {s.sense_key: score for s, score in scored}


def h_enriched(inst: DisambiguationInstance, entry: LexiconEntry, ctx: CascadeContext, params: dict, name: str = "enriched") -> tuple[Verdict, Scores]:
    """Dot product of the context frequencies with R·v + v; with a cutoff this is the mixed filter."""
    cutoff = params.get("cutoff")
    candidates = [s for s in entry.senses if cutoff is None or s.rel_freq >= cutoff]
    if not candidates:
        return Verdict.abstain(name), {}
    ctx.relevance(name)
    matrix, vocab, depth = ctx.matrix, ctx.vocab, params["expand_depth"]
    counts = context_counts(inst, None, params["pos_compat"])
    scored = []
    for sense in candidates:
        vector = ctx.cache.get_or_compute(
            (sense.sense_key, matrix.content_hash, depth),
            lambda s=sense: enrich_vector(term_frequencies(expand_gloss(s, ctx.lexicon, depth)), matrix, vocab),
        )
        scored.append((sense, dot(counts, vector)))
    return _rank_argmax(name, scored), {s.sense_key: score for s, score in scored}


def h_first_sense(inst: DisambiguationInstance, entry: LexiconEntry, ctx: CascadeContext, params: dict, name: str = "first_sense") -> tuple[Verdict, Scores]:
    return Verdict.answer(name, entry.first_sense().sense_key), {}


def _fraction(x) -> bool:
    return 0 < x < 1


def _non_negative(x) -> bool:
    return x >= 0


def _positive(x) -> bool:
    return x >= 1


_CUTOFF = ParamSpec("float", from_config=lambda c: c.cutoff, check=_fraction, requirement="in (0, 1)")
_DEPTH = ParamSpec("int", from_config=lambda c: c.expand_depth, check=_non_negative, requirement=">= 0")


def _radius(pos: str) -> ParamSpec:
    return ParamSpec("int", from_config=lambda c: c.radius_by_pos[pos], check=_non_negative, requirement=">= 0")


HEURISTICS: dict[str, HeuristicDef] = {
    "monosemous": HeuristicDef(
        "monosemous", h_monosemous, {"multiwords": ParamSpec("bool", default=True)}
    ),
    "statistical": HeuristicDef("statistical", h_statistical, {"cutoff": _CUTOFF}),
    "relevance_filter": HeuristicDef(
        "relevance_filter",
        h_relevance_filter,
        {
            "radius_noun": _radius("NOUN"),
            "radius_verb": _radius("VERB"),
            "radius_adj": _radius("ADJ"),
            "radius_adv": _radius("ADV"),
            "cutoff": _CUTOFF,
            "max_senses": ParamSpec("int", from_config=lambda c: c.max_senses, check=_positive, requirement=">= 1"),
            "pos_compat": ParamSpec("bool", default=True),
            "expand_depth": _DEPTH,
            "supervised": ParamSpec("bool", default=False),
            "weighting": ParamSpec("choice", default="relevance", choices=("relevance", "uniform")),
        },
        needs_matrix=lambda params: params["weighting"] == "relevance",
    ),
    "enriched": HeuristicDef(
        "enriched",
        h_enriched,
        {
            "cutoff": ParamSpec("float", default=None, check=_fraction, requirement="in (0, 1)"),
            "expand_depth": _DEPTH,
            "pos_compat": ParamSpec("bool", default=False),
        },
        needs_matrix=lambda params: True,
    ),
    "mixed_filter": HeuristicDef(
        "mixed_filter",
        h_enriched,
        {"cutoff": _CUTOFF, "expand_depth": _DEPTH, "pos_compat": ParamSpec("bool", default=False)},
        needs_matrix=lambda params: True,
    ),
    "first_sense": HeuristicDef("first_sense", h_first_sense, {}),
}


def resolve_params(name: str, explicit: dict, config: RunConfig) -> dict:
    """Explicit parameters over configuration-derived defaults."""
    specs = HEURISTICS[name].params
    return {key: explicit[key] if key in explicit else spec.resolve(config) for key, spec in specs.items()}
