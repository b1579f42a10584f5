## \file tests/test_cascade.py
# -*- coding: utf-8 -*-
import math
import random
from collections import Counter

import numpy as np
import pytest

from conftest import TOY, TOY_STREAMS
from relwsd.cascade.dsl import Step, format_spec, load_cascade, parse_cascade
from relwsd.cascade.heuristics import CascadeContext, h_statistical
from relwsd.cascade.instance import DisambiguationInstance, read_instances, write_instances
from relwsd.cascade.runner import UNKNOWN_LEMMA, answers_of, check_resources, format_trace, run_all, run_cascade
from relwsd.cascade.scoring import (
    EnrichmentCache,
    LemmaRelevance,
    build_supervised_vectors,
    context_counts,
    enrich_vector,
    pos_compatible,
    score_relevance,
)
from relwsd.config import RunConfig
from relwsd.corpus.model import PosTag, Token
from relwsd.lexicon.loader import lexicon_from_data
from relwsd.lexicon.model import LexiconEntry, SenseEntry
from relwsd.logger.exceptions import CascadeSyntaxError, DataError, HashMismatchError, UsageError
from relwsd.relmatrix.cooccurrence import count_cooccurrences
from relwsd.relmatrix.relevance import build_relevance
from relwsd.relmatrix.vocabulary import build_vocabulary

# Test data
EXPECTED_TOY_ANSWERS = [
    ("i1", "bank%1:14:00::", "relevance_filter"),
    ("i2", "bank%1:14:00::", "first_sense"),
    ("i3", "interest%1:21:00::", "statistical"),
    ("i4", "fish%1:05:00::", "monosemous"),
    ("i5", "water%1:17:00::", "relevance_filter"),
]


def token_lexicon(glosses: dict[str, list[list[str]]]):
    """Lexicon from pre-normalized glosses, one NOUN entry per lemma."""
    return lexicon_from_data({"entries": [
        {"lemma": lemma, "pos": "NOUN", "senses": [
            {"sense_key": f"{lemma}%{i}", "rank": i, "gloss_tokens": gloss}
            for i, gloss in enumerate(senses, start=1)
        ]}
        for lemma, senses in glosses.items()
    ]})


def instance(lemma: str, context: list[str], target: int, iid: str = "x") -> DisambiguationInstance:
    return DisambiguationInstance.from_tokens(iid, lemma, context, target, "NOUN")



def random_case(seed: int) -> tuple[CascadeContext, list[DisambiguationInstance]]:
    """Random lexicon, matrix and instances over a small word list; some target lemmas are unknown."""
    rng = random.Random(seed)
    words = [f"w{i}" for i in range(40)]
    lemmas = [f"t{i}" for i in range(rng.randint(1, 6))]
    lex = lexicon_from_data({"entries": [
        {"lemma": lemma, "pos": "NOUN", "senses": [
            {"sense_key": f"{lemma}%{rank}", "rank": rank, "gloss_tokens": rng.sample(words, rng.randint(1, 6)),
             "count": rng.randint(0, 20)}
            for rank in range(1, rng.randint(1, 4) + 1)
        ]}
        for lemma in lemmas
    ]})
    docs = [rng.choices(words + lemmas, k=rng.randint(20, 200)) for _ in range(rng.randint(2, 8))]
    vocab = build_vocabulary(docs, 100)
    matrix = build_relevance(count_cooccurrences(docs, vocab, 3), threshold=1.0)
    instances = []
    for i in range(rng.randint(1, 30)):
        context = rng.choices(words, k=rng.randint(0, 40))
        target = rng.randint(0, len(context))
        lemma = rng.choice(lemmas + ["unknownword"])
        instances.append(instance(lemma, context[:target] + [lemma] + context[target:], target, f"r{i:02d}"))
    return CascadeContext(lex, matrix, vocab, RunConfig()), instances


# Scoring
def test_score_worked_example():
    """w twice in the context, in one of two glosses, R(w, α)=4: 4 · 2 · 1 · ln 2."""
    lex = token_lexicon({"alpha": [["w", "x"], ["y"]]})
    inst = instance("alpha", ["w", "alpha", "w", "z"], 1)
    score = score_relevance(inst, ["w"], lambda w, a: 4.0, lex)
    assert score == pytest.approx(5.545177444479562)
    assert score == pytest.approx(8 * math.log(2))


@pytest.mark.parametrize("seed", range(200))
def test_score_matches_triple_loop(seed):
    """The scorer agrees with a direct sum over senses, context words and gloss words."""
    rng = random.Random(seed)
    words = [f"w{i}" for i in range(rng.randint(2, 30))]
    senses = [[rng.choice(words) for _ in range(rng.randrange(1, 10))] for _ in range(rng.randint(1, 6))]
    lex = token_lexicon({"alpha": senses})
    context = [rng.choice(words) for _ in range(rng.randrange(0, 50))]
    inst = instance("alpha", context + ["alpha"], len(context))
    weights = {w: rng.choice([0.0, 2.0, 2.5, 7.0, rng.uniform(2.0, 50.0)]) for w in words}

    def relevance(w, a):
        return weights[w]

    n = len(senses)
    for gloss in senses:
        expected = 0.0
        for w in set(context):
            d = sum(1 for other in senses if w in other)
            if w not in gloss:
                continue
            expected += weights[w] * context.count(w) * gloss.count(w) * math.log(n / d)
        assert score_relevance(inst, gloss, relevance, lex) == pytest.approx(expected, rel=1e-9)


def test_score_unknown_lemma_is_zero():
    lex = token_lexicon({"alpha": [["w"]]})
    assert score_relevance(instance("beta", ["w", "beta"], 1), ["w"], lambda w, a: 4.0, lex) == 0.0


def test_word_in_every_gloss_does_not_count():
    """ln(N / N) = 0: words shared by all senses discriminate nothing."""
    lex = token_lexicon({"alpha": [["w", "x"], ["w", "y"]]})
    inst = instance("alpha", ["w", "w", "alpha"], 2)
    assert score_relevance(inst, ["w", "x"], lambda w, a: 9.0, lex) == 0.0


def test_enrichment_equals_dense_product():
    """R·v + v computed sparsely equals the dense matrix product."""
    vocab = build_vocabulary(TOY_STREAMS, 100)
    matrix = build_relevance(count_cooccurrences(TOY_STREAMS, vocab, 30))
    dense = matrix.symmetric.toarray()
    rng = np.random.default_rng(3)
    for _ in range(5):
        x = rng.integers(0, 3, len(vocab)).astype(float)
        v = {vocab.lemma(i): float(x[i]) for i in range(len(vocab)) if x[i]}
        expected = dense @ x + x
        got = enrich_vector(v, matrix, vocab)
        assert set(got) == {vocab.lemma(i) for i in np.nonzero(expected)[0]}
        for lemma, value in got.items():
            assert value == pytest.approx(expected[vocab.id_of(lemma)])


@pytest.mark.parametrize("seed", range(100))
def test_enrichment_matches_dense_product_on_random_matrices(seed):
    """Sparse R·v + v equals the dense product for random corpora of up to 200 words."""
    rng = random.Random(seed)
    words = [f"w{i}" for i in range(rng.randint(2, 200))]
    docs = [rng.choices(words, k=rng.randint(2, 300)) for _ in range(rng.randint(1, 6))]
    vocab = build_vocabulary(docs, 200)
    matrix = build_relevance(count_cooccurrences(docs, vocab, rng.choice([1, 3, 30])), threshold=rng.choice([0.5, 1.0, 2.0]))
    dense = matrix.symmetric.toarray()
    x = np.zeros(len(vocab))
    for lemma in rng.sample(list(vocab), rng.randint(0, len(vocab))):
        x[vocab.id_of(lemma)] = rng.choice([1.0, 2.0, 0.5, rng.uniform(0.0, 5.0)])
    v = {vocab.lemma(i): float(x[i]) for i in range(len(vocab)) if x[i]}
    expected = dense @ x + x
    got = enrich_vector(v, matrix, vocab)
    assert set(got) == {vocab.lemma(i) for i in np.nonzero(expected)[0]}
    for lemma, value in got.items():
        assert value == pytest.approx(expected[vocab.id_of(lemma)], rel=1e-9)


def test_enrichment_keeps_words_outside_vocabulary():
    vocab = build_vocabulary(TOY_STREAMS, 100)
    matrix = build_relevance(count_cooccurrences(TOY_STREAMS, vocab, 30))
    assert enrich_vector({"money": 1.0, "zebra": 2.0}, matrix, vocab) == pytest.approx(
        {"bank": 2.2, "loan": 2.2, "money": 1.0, "zebra": 2.0}
    )


def test_lemma_relevance():
    """R by lemma; out-of-vocabulary words relate to nothing; vocabularies must match."""
    vocab = build_vocabulary(TOY_STREAMS, 100)
    matrix = build_relevance(count_cooccurrences(TOY_STREAMS, vocab, 30))
    relevance = LemmaRelevance(matrix, vocab)
    assert relevance("money", "bank") == pytest.approx(2.2)
    assert relevance("river", "bank") == 0.0
    assert relevance("zebra", "bank") == 0.0
    with pytest.raises(HashMismatchError):
        LemmaRelevance(matrix, build_vocabulary(TOY_STREAMS, 3))


def test_supervised_vectors():
    """Gloss counts plus the averaged example counts."""
    sense = SenseEntry("a%1", 1, ("a",), 1.0, example_vectors=(("a", "b"), ("b",)))
    assert build_supervised_vectors(sense) == {"a": 1.5, "b": 1.0}


@pytest.mark.parametrize("a, b, expected", [
    (PosTag.NOUN, PosTag.VERB, True),
    (PosTag.VERB, PosTag.NOUN, True),
    (PosTag.NOUN, PosTag.ADV, False),
    (PosTag.ADJ, PosTag.ADV, False),
    (PosTag.OTHER, PosTag.NOUN, False),
    (None, PosTag.ADV, True),
])
def test_pos_compatible(a, b, expected):
    assert pos_compatible(a, b) is expected


def test_context_counts_radius_and_pos():
    """The target is excluded; radius and POS compatibility narrow the context."""
    tokens = [Token("a", "a", position=0), Token("b", "b", position=1, pos_tag=PosTag.ADV),
              Token("t", "t", position=2), Token("a", "a", position=3), Token("c", "c", position=4)]
    inst = DisambiguationInstance("x", "t", PosTag.NOUN, tuple(tokens), 2)
    assert context_counts(inst) == Counter({"a": 2, "b": 1, "c": 1})
    assert context_counts(inst, radius=1) == Counter({"a": 1, "b": 1})
    assert context_counts(inst, pos_compat=True) == Counter({"a": 2, "c": 1})


def test_enrichment_cache_computes_once():
    cache = EnrichmentCache()
    calls = []
    for _ in range(3):
        cache.get_or_compute("k", lambda: calls.append(1) or 42)
    assert len(calls) == 1 and len(cache) == 1


# Statistical heuristic
@pytest.mark.parametrize("seed", range(20))
def test_statistical_answers_iff_single_survivor(seed):
    """Answer exactly when one sense reaches the cutoff, and then that sense."""
    rng = random.Random(seed)
    raw = [rng.random() ** 3 for _ in range(rng.randrange(1, 6))]
    freqs = [x / sum(raw) for x in raw]
    cutoff = rng.choice([0.05, 0.1, 0.3, 0.5])
    entry = LexiconEntry("w", PosTag.NOUN, tuple(SenseEntry(f"w%{i}", i + 1, ("g",), f) for i, f in enumerate(freqs)))
    verdict, scores = h_statistical(instance("w", ["w"], 0), entry, None, {"cutoff": cutoff})
    survivors = [i for i, f in enumerate(freqs) if f >= cutoff]
    assert verdict.answered == (len(survivors) == 1)
    if verdict.answered:
        assert verdict.sense_key == f"w%{survivors[0]}"
    assert len(scores) == len(freqs)


# Cascade language
def test_parse_toy_cascade():
    """Comments and blank lines are skipped; parameters are typed."""
    spec = load_cascade(TOY / "toy.cascade")
    assert spec.names == ["monosemous", "statistical", "relevance_filter", "first_sense"]
    assert spec.steps[1].params == {"cutoff": 0.1}
    assert spec.steps[2].params == {}
    assert spec.steps[2].line == 5


def test_parse_parameters():
    spec = parse_cascade("relevance_filter radius_noun=25 radius_adj=5 pos_compat=off weighting=uniform\n")
    assert spec.steps[0].params == {"radius_noun": 25, "radius_adj": 5, "pos_compat": False, "weighting": "uniform"}


@pytest.mark.parametrize("text", [
    "monosemous\nfirst_sense",
    "statistical cutoff=0.25\nrelevance_filter max_senses=3 expand_depth=0 supervised=on\nfirst_sense\n",
    "enriched cutoff=0.1 pos_compat=on\nmixed_filter\n",
])
def test_format_spec_round_trip(text):
    """Canonical text parses back to the same program."""
    spec = parse_cascade(text)
    assert parse_cascade(format_spec(spec)) == spec
    assert format_spec(parse_cascade(format_spec(spec))) == format_spec(spec)


@pytest.mark.parametrize("text, line, fragment", [
    ("monosemous\n\nbogus\n", 3, "unknown heuristic 'bogus'"),
    ("monosemous\nstatistical radius=3\n", 2, "'statistical' has no parameter 'radius'"),
    ("statistical cutoff=1.5\n", 1, "must be in (0, 1)"),
    ("statistical cutoff=abc\n", 1, "statistical.cutoff"),
    ("relevance_filter max_senses=0\n", 1, "must be >= 1"),
    ("statistical cutoff=0.1 cutoff=0.2\n", 1, "given twice"),
    ("relevance_filter weighting=magic\n", 1, "expected one of relevance, uniform"),
    ("# nothing here\n\n", 1, "empty cascade"),
    ("", 1, "empty cascade"),
])
def test_cascade_errors(text, line, fragment):
    """Errors name the line they were found on."""
    with pytest.raises(CascadeSyntaxError) as excinfo:
        parse_cascade(text)
    assert excinfo.value.line == line
    assert fragment in str(excinfo.value)


def test_cascade_syntax_error():
    with pytest.raises(CascadeSyntaxError):
        parse_cascade("monosemous\nstatistical cutoff=\n")
    with pytest.raises(CascadeSyntaxError):
        parse_cascade("monosemous, first_sense\n")


def test_steps_compare_without_line():
    assert Step("first_sense", {}, 1) == Step("first_sense", {}, 7)


# Running
def test_toy_cascade_answers(toy_context, toy_instances):
    """The toy cascade gives the checked-in answers; the unknown lemma is left out."""
    spec = load_cascade(TOY / "toy.cascade")
    results = run_all(spec, toy_instances, toy_context)
    assert answers_of(toy_instances, results) == EXPECTED_TOY_ANSWERS


def test_threads_do_not_change_answers(toy_context, toy_instances):
    spec = load_cascade(TOY / "toy.cascade")
    serial = answers_of(toy_instances, run_all(spec, toy_instances, toy_context))
    threaded = answers_of(toy_instances, run_all(spec, toy_instances, toy_context, jobs=4))
    assert threaded == serial


def test_each_instance_answered_once(toy_context, toy_instances):
    """An answer ends the cascade: the answering step is the last one evaluated."""
    spec = load_cascade(TOY / "toy.cascade")
    for inst in toy_instances:
        result = run_cascade(spec, inst, toy_context)
        answering = [step for step in result.trace if step.verdict.answered]
        assert len(answering) <= 1
        if answering:
            assert result.trace[-1] is answering[0]
            assert result.answered_by == answering[0].index


@pytest.mark.parametrize("k", [1, 2, 3])
def test_prefix_answers_are_kept(toy_context, toy_instances, k):
    """Appending steps never changes an answer the shorter cascade already gave."""
    spec = load_cascade(TOY / "toy.cascade")
    prefix = parse_cascade(format_spec(type(spec)(spec.steps[:k])))
    longer = parse_cascade(format_spec(type(spec)(spec.steps[:k + 1])))
    short = set(answers_of(toy_instances, run_all(prefix, toy_instances, toy_context)))
    extended = set(answers_of(toy_instances, run_all(longer, toy_instances, toy_context)))
    assert short <= extended


@pytest.mark.parametrize("seed", range(25))
def test_random_runs_account_for_every_instance(seed):
    """Every instance is answered by at most one step, the last one run; answers add up per heuristic."""
    ctx, instances = random_case(seed)
    spec = load_cascade(TOY / "toy.cascade")
    results = run_all(spec, instances, ctx)
    assert len(results) == len(instances)
    answered = 0
    for result in results:
        answering = [step for step in result.trace if step.verdict.answered]
        assert len(answering) <= 1
        if answering:
            answered += 1
            assert result.trace[-1] is answering[0]
            assert result.answered_by == answering[0].index
        else:
            assert result.answered_by is None and not result.verdict.answered
    answers = answers_of(instances, results)
    assert len(answers) == answered == len({iid for iid, _, _ in answers})
    by_heuristic = Counter(heuristic for _, _, heuristic in answers)
    assert sum(by_heuristic.values()) == answered
    assert set(by_heuristic) <= set(spec.names)
    unknown = sum(1 for inst in instances if inst.lemma == "unknownword")
    assert answered == len(instances) - unknown


@pytest.mark.parametrize("seed", range(25))
def test_random_runs_keep_prefix_answers(seed):
    """On random instance sets, each longer prefix of the cascade keeps every answer of the shorter one."""
    ctx, instances = random_case(seed)
    spec = load_cascade(TOY / "toy.cascade")
    previous: set = set()
    for k in range(1, len(spec.steps) + 1):
        prefix = parse_cascade(format_spec(type(spec)(spec.steps[:k])))
        current = set(answers_of(instances, run_all(prefix, instances, ctx)))
        assert previous <= current
        previous = current


def test_unknown_lemma(toy_context, toy_instances):
    """A lemma missing from the lexicon abstains without running any step."""
    spec = load_cascade(TOY / "toy.cascade")
    inst = next(i for i in toy_instances if i.instance_id == "i6")
    result = run_cascade(spec, inst, toy_context)
    assert not result.verdict.answered
    assert [step.name for step in result.trace] == [UNKNOWN_LEMMA]
    assert result.answered_by is None
    assert format_trace(inst, result, len(spec)) == [
        "i6 (unknownword):",
        "  0. unknown: ABSTAIN lemma 'unknownword' is not in the lexicon",
    ]


def test_trace_lines(toy_context, toy_instances):
    """Every evaluated step is listed with its scores; later steps are marked as skipped."""
    spec = load_cascade(TOY / "toy.cascade")
    by_id = {i.instance_id: i for i in toy_instances}
    lines = format_trace(by_id["i2"], run_cascade(spec, by_id["i2"], toy_context), len(spec))
    assert lines == [
        "i2 (bank):",
        "  1. monosemous: ABSTAIN",
        "  2. statistical: ABSTAIN [bank%1:14:00::=0.6, bank%1:17:01::=0.4]",
        "  3. relevance_filter: ABSTAIN [bank%1:14:00::=0, bank%1:17:01::=0]",
        "  4. first_sense: ANSWER bank%1:14:00:: (1)",
    ]
    lines = format_trace(by_id["i4"], run_cascade(spec, by_id["i4"], toy_context), len(spec))
    assert lines[1] == "  1. monosemous: ANSWER fish%1:05:00:: (1)"
    assert lines[2:] == ["  2. not evaluated", "  3. not evaluated", "  4. not evaluated"]


def test_uniform_weighting_needs_no_matrix(toy_context, toy_instances):
    """Without relevance weights the river context picks the river sense of bank."""
    ctx = CascadeContext(toy_context.lexicon, config=RunConfig())
    spec = parse_cascade("relevance_filter weighting=uniform\n")
    by_id = {i.instance_id: i for i in toy_instances}
    result = run_cascade(spec, by_id["i2"], ctx)
    assert result.verdict.sense_key == "bank%1:17:01::"


def test_missing_matrix_fails_before_running(toy_context):
    ctx = CascadeContext(toy_context.lexicon, config=RunConfig())
    with pytest.raises(UsageError):
        check_resources(parse_cascade("monosemous\nrelevance_filter\n"), ctx)
    check_resources(parse_cascade("monosemous\nstatistical\nfirst_sense\n"), ctx)


def test_enriched_vectors(toy_context, toy_instances):
    """river matches the river gloss itself, water through R(river, water)=2.2."""
    by_id = {i.instance_id: i for i in toy_instances}
    result = run_cascade(parse_cascade("enriched\n"), by_id["i2"], toy_context)
    assert result.verdict.sense_key == "bank%1:17:01::"
    assert result.verdict.score == pytest.approx(3.2)
    assert result.trace[0].scores["bank%1:14:00::"] == 0.0


def test_mixed_filter_drops_rare_senses(toy_context, toy_instances):
    """With the cutoff above the river sense's frequency only the money sense is scored."""
    by_id = {i.instance_id: i for i in toy_instances}
    result = run_cascade(parse_cascade("mixed_filter cutoff=0.5\n"), by_id["i2"], toy_context)
    assert not result.verdict.answered
    assert list(result.trace[0].scores) == ["bank%1:14:00::"]


@pytest.mark.parametrize("factor", [0.5, 3.0, 10.0])
def test_scaling_the_matrix_keeps_answers(toy_context, toy_instances, factor):
    """Multiplying every weight by a constant changes no decision."""
    spec = load_cascade(TOY / "toy.cascade")
    scaled = CascadeContext(toy_context.lexicon, toy_context.matrix.scaled(factor), toy_context.vocab, RunConfig())
    assert answers_of(toy_instances, run_all(spec, toy_instances, scaled)) == EXPECTED_TOY_ANSWERS


def test_monosemous_multiword(toy_context):
    """A multiword covering the target with a single sense answers."""
    lex = lexicon_from_data({"entries": [
        {"lemma": "bank", "pos": "NOUN", "senses": [
            {"sense_key": "bank%1", "rank": 1, "gloss_tokens": ["money"]},
            {"sense_key": "bank%2", "rank": 2, "gloss_tokens": ["river"]},
        ]},
        {"lemma": "river_bank", "pos": "NOUN", "senses": [
            {"sense_key": "river_bank%1", "rank": 1, "gloss_tokens": ["shore"]},
        ]},
    ]})
    ctx = CascadeContext(lex, config=RunConfig())
    spec = parse_cascade("monosemous\n")
    assert run_cascade(spec, instance("bank", ["river", "bank"], 1), ctx).verdict.sense_key == "river_bank%1"
    assert not run_cascade(spec, instance("bank", ["money", "bank"], 1), ctx).verdict.answered
    off = parse_cascade("monosemous multiwords=off\n")
    assert not run_cascade(off, instance("bank", ["river", "bank"], 1), ctx).verdict.answered


# Instance files
def test_read_toy_instances(toy_instances):
    assert [i.instance_id for i in toy_instances] == ["i1", "i2", "i3", "i4", "i5", "i6"]
    assert toy_instances[0].target.lemma == "bank" and toy_instances[0].pos == PosTag.NOUN


def test_instances_round_trip(tmp_path, toy_instances):
    """Instances and the meta record survive a write and a read."""
    path = tmp_path / "instances.jsonl"
    write_instances(toy_instances, path, {"stopwords": "abc"})
    meta, again = read_instances(path)
    assert meta == {"stopwords": "abc"}
    assert [i.to_record() for i in again] == [i.to_record() for i in toy_instances]


@pytest.mark.parametrize("lines, fragment", [
    (['{"id": "a", "lemma": "w", "target": 0}'], "missing 'tokens'"),
    (['{"id": "a", "lemma": "w", "target": 3, "tokens": ["w"]}'], "outside the context"),
    (['{"id": "a", "lemma": "w", "target": 0, "tokens": ["w"]}'] * 2, "repeated"),
    (['{"id": "a", "lemma": "w", "target": 0, "tokens": ["w"]}', '{"meta": {}}'], "meta record must come first"),
])
def test_bad_instance_files(tmp_path, lines, fragment):
    """Malformed records are reported with their line number."""
    path = tmp_path / "instances.jsonl"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    with pytest.raises(DataError) as excinfo:
        read_instances(path)
    assert fragment in str(excinfo.value)
    assert f"{path}:" in str(excinfo.value)
