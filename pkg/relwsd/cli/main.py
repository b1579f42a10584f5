## \file relwsd/cli/main.py
# -*- coding: utf-8 -*-
"""
The `relwsd` command.

    relwsd normalize     --corpus raw/ --out tokens/
    relwsd build-matrix  --corpus tokens/ --vocab-size 20000 --radius 30 --threshold 2.0 --out model/
    relwsd lexicon check --lexicon lexicon.json
    relwsd disambiguate  --lexicon lexicon.json --matrix model/matrix.bin --cascade all.cascade
                         --instances test.jsonl --out answers.txt [--trace]
    relwsd evaluate      --answers answers.txt --gold gold.txt [--cascade all.cascade] [--out report.txt]
    relwsd baseline      random --lexicon lexicon.json --instances test.jsonl --out random.txt
    relwsd compare       a.cascade b.cascade --lexicon ... --matrix ... --instances ... --gold ...
    relwsd pseudoword    money river --corpus tokens/ --out bench/ [--holdout 0.2]

`--corpus` of build-matrix and pseudoword takes either token streams or a raw
text tree; a raw tree is normalized into `<out>/tokens` first. `--tokens`
names a token-stream directory explicitly.

Every subcommand accepts `--config FILE` (TOML or JSON) and flag overrides;
flags win over the file. Exit status: 0 success, 1 usage error, 2 data error.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from relwsd.cascade.dsl import format_spec, load_cascade
from relwsd.cascade.heuristics import CascadeContext
from relwsd.cascade.instance import read_instances
from relwsd.cascade.runner import answers_of, format_trace, run_all, run_cascades
from relwsd.cli.pseudoword import build_pseudoword_task, write_pseudoword_task
from relwsd.config import RunConfig, load_config
from relwsd.corpus.normalizer import Normalizer
from relwsd.corpus.pipeline import iter_token_streams, normalize_corpus, stream_files, stream_stopwords_hash
from relwsd.evaluation.baselines import baseline_first_sense, baseline_random
from relwsd.evaluation.gold import Answer, read_answers, read_gold, write_answers
from relwsd.evaluation.report import compare_systems, score_answers
from relwsd.file import save_text_file
from relwsd.jjson import j_dumps, j_loads
from relwsd.lexicon.loader import lexicon_from_data, load_lexicon, validate_lexicon_data
from relwsd.lexicon.multiword import load_inflections
from relwsd.logger import logger
from relwsd.logger.exceptions import EmptyCorpusError, HashMismatchError, RelwsdError, UsageError
from relwsd.printer import pprint
from relwsd.relmatrix.codec import load_matrix, save_matrix
from relwsd.relmatrix.cooccurrence import count_stream_files
from relwsd.relmatrix.relevance import build_relevance
from relwsd.relmatrix.vocabulary import build_vocabulary, load_vocabulary, save_vocabulary
from relwsd.tsv import format_header
from relwsd.version import __version__

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2

VOCAB_FILE = "vocab.tsv"
TOKENS_DIR = "tokens"
MATRIX_FILE = "matrix.bin"

# Flags that override configuration keys of the same name.
OVERRIDES = (
    "corpus", "tokens", "vocab", "matrix", "lexicon", "inflections", "cascade", "instances", "gold",
    "answers", "out", "stopwords", "log_file", "log_level", "lemmatizer", "vocab_size", "radius",
    "threshold", "cutoff", "max_senses", "expand_depth", "radius_noun", "radius_verb", "radius_adj",
    "radius_adv", "seed", "jobs",
)


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises `UsageError` instead of exiting, so that `main` owns the exit status."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False)
    group = common.add_argument_group("run")
    group.add_argument("--config", type=str, help="TOML or JSON configuration file")
    group.add_argument("--seed", type=int, help="seed of every random choice")
    group.add_argument("--jobs", type=int, help="worker processes or threads")
    group.add_argument("--trace", action="store_true", help="print per-instance cascade traces")
    group.add_argument("--log-level", type=str, help="DEBUG, INFO, WARNING, ERROR")
    group.add_argument("--log-file", type=str, help="JSON-lines log file")

    paths = common.add_argument_group("paths")
    for name, text in (
        ("corpus", "raw text tree"),
        ("tokens", "normalized token streams"),
        ("vocab", "vocabulary file"),
        ("matrix", "relevance matrix file"),
        ("lexicon", "lexicon JSON file"),
        ("inflections", "inflection table for multiword matching"),
        ("cascade", "cascade program"),
        ("instances", "instances JSON-lines file"),
        ("gold", "gold standard"),
        ("answers", "answer file"),
        ("out", "output file or directory"),
        ("stopwords", "stopword list (default: bundled English list)"),
    ):
        paths.add_argument(f"--{name}", type=str, help=text)

    params = common.add_argument_group("parameters")
    params.add_argument("--lemmatizer", choices=("suffix", "identity"))
    params.add_argument("--vocab-size", type=int, help="K, the vocabulary size")
    params.add_argument("--radius", type=int, help="matrix window radius")
    params.add_argument("--threshold", type=float, help="minimum stored relevance")
    params.add_argument("--cutoff", type=float, help="sense frequency cutoff")
    params.add_argument("--max-senses", type=int)
    params.add_argument("--expand-depth", type=int, help="hyponym levels added to glosses")
    for pos in ("noun", "verb", "adj", "adv"):
        params.add_argument(f"--radius-{pos}", type=int, help=f"context radius for {pos} targets")
    return common


def build_parser() -> ArgumentParser:
    common = _common_options()
    parser = ArgumentParser(prog="relwsd", description="Relevance-matrix word sense disambiguation")
    parser.add_argument("--version", action="version", version=f"relwsd {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("normalize", parents=[common], help="raw text tree to token streams")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("build-matrix", parents=[common], help="token streams to vocabulary and relevance matrix")
    p.set_defaults(func=cmd_build_matrix)

    p = sub.add_parser("lexicon", help="lexicon tools")
    lexicon_sub = p.add_subparsers(dest="lexicon_command", required=True, parser_class=ArgumentParser)
    check = lexicon_sub.add_parser("check", parents=[common], help="report every problem of a lexicon file")
    check.set_defaults(func=cmd_lexicon_check)

    p = sub.add_parser("disambiguate", parents=[common], help="run a cascade over instances")
    p.set_defaults(func=cmd_disambiguate)

    p = sub.add_parser("evaluate", parents=[common], help="score answers against a gold standard")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("baseline", parents=[common], help="answers of a baseline system")
    p.add_argument("kind", choices=("random", "first_sense"))
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("compare", parents=[common], help="score several cascades and the baselines side by side")
    p.add_argument("cascades", nargs="+", help="cascade programs, one system each")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("pseudoword", parents=[common], help="build a pseudoword benchmark from token streams")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p.add_argument("--holdout", type=float, default=0.2, help="share of documents held out (default 0.2)")
    p.add_argument("--gloss-size", type=int, default=20, help="gloss words per sense (default 20)")
    p.set_defaults(func=cmd_pseudoword)
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    base = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    return base.merged({key: getattr(args, key, None) for key in OVERRIDES})


def _require(config: RunConfig, key: str, exists: bool = True) -> Path:
    value = getattr(config, key)
    if not value:
        raise UsageError(f"--{key.replace('_', '-')} is required (flag or configuration key '{key}')")
    path = Path(value)
    if exists and not path.exists():
        raise UsageError(f"{path} does not exist")
    return path


def _output(config: RunConfig, key: str = "out") -> Path:
    return _require(config, key, exists=False)


def _load_context(config: RunConfig) -> CascadeContext:
    """Lexicon plus, when configured, the matrix and its vocabulary."""
    normalizer = Normalizer.from_config(config)
    inflections = load_inflections(config.inflections) if config.inflections else None
    lexicon = load_lexicon(_require(config, "lexicon"), normalizer, inflections=inflections)
    if not config.matrix:
        return CascadeContext(lexicon, config=config)

    matrix_path = _require(config, "matrix")
    vocab_path = Path(config.vocab) if config.vocab else matrix_path.with_name(VOCAB_FILE)
    if not vocab_path.exists():
        raise UsageError(f"vocabulary {vocab_path} does not exist (use --vocab)")
    vocab = load_vocabulary(vocab_path)
    matrix = load_matrix(matrix_path, vocab)
    if matrix.stopwords_hash and matrix.stopwords_hash != normalizer.stopwords.content_hash:
        raise HashMismatchError(
            f"{matrix_path} was built from tokens normalized with stopword list {matrix.stopwords_hash[:12]}, "
            f"this run uses {normalizer.stopwords.content_hash[:12]}"
        )
    return CascadeContext(lexicon, matrix, vocab, config)


def _check_instances(meta: dict, ctx: CascadeContext, path: Path) -> None:
    found = meta.get("stopwords")
    expected = ctx.matrix.stopwords_hash if ctx.matrix is not None else None
    if found and expected and found != expected:
        raise HashMismatchError(
            f"{path}: contexts were normalized with stopword list {found[:12]}, "
            f"the matrix with {expected[:12]}"
        )


def _token_source(config: RunConfig, out_dir: Path) -> Path:
    """Directory of token streams for commands that read a corpus.

    `--tokens` is taken as is. A `--corpus` whose stream files carry a
    normalization header is used directly; any other `--corpus` is a raw text
    tree, normalized into `out_dir/tokens` first.
    """
    if config.tokens:
        return _require(config, "tokens")
    if not config.corpus:
        raise UsageError("--corpus is required (flag or configuration key 'corpus'; --tokens for token streams)")
    corpus = _require(config, "corpus")
    if stream_stopwords_hash(corpus) is not None:
        return corpus
    target = out_dir / TOKENS_DIR
    logger.info(f"{corpus} holds no token streams, normalizing it into {target}")
    normalize_corpus(corpus, target, Normalizer.from_config(config), config.artifact_meta(), config.jobs)
    return target


def cmd_normalize(args: argparse.Namespace, config: RunConfig) -> int:
    normalizer = Normalizer.from_config(config)
    diagnostics = normalize_corpus(_require(config, "corpus"), _output(config), normalizer, config.artifact_meta(), config.jobs)
    pprint(diagnostics.to_dict(), text_color="green")
    return EXIT_OK


def cmd_build_matrix(args: argparse.Namespace, config: RunConfig) -> int:
    if not config.out and not (config.vocab and config.matrix):
        raise UsageError("give --out, or both --vocab and --matrix")
    vocab_path = Path(config.vocab) if config.vocab else Path(config.out) / VOCAB_FILE
    matrix_path = Path(config.matrix) if config.matrix else Path(config.out) / MATRIX_FILE
    tokens = _token_source(config, Path(config.out) if config.out else matrix_path.parent)

    # Two passes over the files, vocabulary then counts; no pass holds the corpus.
    paths = stream_files(tokens)
    if not paths:
        raise EmptyCorpusError(f"{tokens} holds no token streams")
    stopwords = stream_stopwords_hash(tokens)
    vocab = build_vocabulary(iter_token_streams(tokens, stopwords), config.vocab_size)
    counts = count_stream_files(paths, vocab, config.radius, config.jobs)
    matrix = build_relevance(counts, config.threshold, stopwords, config.config_hash())

    meta = config.artifact_meta()
    save_vocabulary(vocab, vocab_path, meta)
    save_matrix(matrix, matrix_path, meta)
    logger.success(f"{len(vocab)} lemmas, {len(matrix)} cells, {counts.total_positions} positions")
    return EXIT_OK


def cmd_lexicon_check(args: argparse.Namespace, config: RunConfig) -> int:
    path = _require(config, "lexicon")
    normalizer = Normalizer.from_config(config)
    data = j_loads(path)
    problems = validate_lexicon_data(data, normalizer)
    if problems:
        pprint([f"{path}: {p}" for p in problems], text_color="red")
        logger.error(f"{path}: {len(problems)} problem(s)", None, False)
        return EXIT_DATA
    lexicon = lexicon_from_data(data, normalizer, str(path))
    senses = sum(len(e.senses) for e in lexicon)
    multiwords = len(lexicon.multiwords) if lexicon.multiwords is not None else 0
    pprint(f"{path}: {len(lexicon)} entries, {senses} senses, {multiwords} multiwords", text_color="green")
    return EXIT_OK


def cmd_disambiguate(args: argparse.Namespace, config: RunConfig) -> int:
    spec = load_cascade(_require(config, "cascade"))
    instances_path = _require(config, "instances")
    out = _output(config, "answers" if config.answers else "out")
    ctx = _load_context(config)
    meta, instances = read_instances(instances_path)
    _check_instances(meta, ctx, instances_path)

    if not instances:
        save_text_file("", out)
        logger.warning(f"{instances_path} holds no instances, {out} left empty")
        return EXIT_OK

    results = run_all(spec, instances, ctx, config.jobs)
    answers = answers_of(instances, results)
    write_answers(answers, out, config.artifact_meta(cascade=" | ".join(format_spec(spec).splitlines())))
    if args.trace:
        for inst, result in zip(instances, results):
            pprint(format_trace(inst, result, len(spec)), text_color="cyan")
    logger.success(f"{len(answers)} of {len(instances)} instances answered, written to {out}")
    return EXIT_OK


def _write_report(text: str, data: dict, out: Path, meta: dict) -> None:
    if out.suffix.lower() == ".json":
        j_dumps(data, out)
        return
    save_text_file(format_header(meta) + text.splitlines(), out)
    j_dumps(data, out.with_suffix(".json"))


def cmd_evaluate(args: argparse.Namespace, config: RunConfig) -> int:
    gold = read_gold(_require(config, "gold"))
    answers = read_answers(_require(config, "answers"))
    total = len(read_instances(_require(config, "instances"))[1]) if config.instances else None
    order = load_cascade(_require(config, "cascade")).names if config.cascade else None
    report = score_answers(answers, gold, total, order)
    pprint(report.to_text().rstrip("\n"))
    if config.out:
        _write_report(report.to_text(), report.to_dict(), Path(config.out), config.artifact_meta())
    return EXIT_OK


def cmd_baseline(args: argparse.Namespace, config: RunConfig) -> int:
    lexicon = load_lexicon(_require(config, "lexicon"), Normalizer.from_config(config))
    _, instances = read_instances(_require(config, "instances"))
    out = _output(config, "answers" if config.answers else "out")
    if args.kind == "random":
        answers = baseline_random(instances, lexicon, config.seed)
    else:
        answers = baseline_first_sense(instances, lexicon)
    write_answers(answers, out, config.artifact_meta(baseline=args.kind))
    logger.success(f"{args.kind}: {len(answers)} of {len(instances)} instances answered")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, config: RunConfig) -> int:
    specs = {}
    for name in args.cascades:
        path = Path(name)
        if not path.exists():
            raise UsageError(f"{path} does not exist")
        if path.stem in specs:
            raise UsageError(f"two cascades named '{path.stem}'")
        specs[path.stem] = load_cascade(path)
    gold = read_gold(_require(config, "gold"))
    instances_path = _require(config, "instances")
    ctx = _load_context(config)
    meta, instances = read_instances(instances_path)
    _check_instances(meta, ctx, instances_path)

    results = run_cascades(specs, instances, ctx, config.jobs)
    systems = {name: [Answer(*a) for a in answers_of(instances, runs)] for name, runs in results.items()}
    systems["baseline_random"] = baseline_random(instances, ctx.lexicon, config.seed)
    systems["baseline_first_sense"] = baseline_first_sense(instances, ctx.lexicon)
    report = compare_systems(systems, gold, len(instances))
    pprint(report.to_text().rstrip("\n"))
    if config.out:
        _write_report(report.to_text(), report.to_dict(), Path(config.out), config.artifact_meta())
    return EXIT_OK


def cmd_pseudoword(args: argparse.Namespace, config: RunConfig) -> int:
    out = _output(config)
    streams = list(iter_token_streams(_token_source(config, out)))
    task = build_pseudoword_task(
        streams, args.word_a, args.word_b,
        holdout=args.holdout, seed=config.seed, vocab_size=config.vocab_size,
        radius=config.radius, threshold=config.threshold, gloss_size=args.gloss_size,
    )
    paths = write_pseudoword_task(task, out, config.artifact_meta(seed=config.seed, holdout=args.holdout))
    pprint({key: str(path) for key, path in paths.items()}, text_color="green")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse the command line, run the subcommand and map errors onto the exit status."""
    try:
        args = build_parser().parse_args(argv)
        config = make_config(args)
        logger.configure(level=config.log_level, log_file=config.log_file)
        func: Callable[[argparse.Namespace, RunConfig], int] = args.func
        return func(args, config)
    except RelwsdError as ex:
        logger.error(f"{type(ex).__name__}: {ex}", None, False)
        print(f"relwsd: error: {ex}", file=sys.stderr)
        return ex.exit_code
    except OSError as ex:
        logger.error("I/O error", ex, exc_info=False)
        print(f"relwsd: error: {ex}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
