"""Command-line driver: train, analyze, score, sweep, extract-tests and mask."""

import argparse
import contextlib
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from tqdm.contrib.logging import logging_redirect_tqdm

from core.utilities.Errors import BracketingError, ConfigError, ExitCode
from core.utilities.Settings import Settings
from nlp.analysis.CompoundAnalyzer import MODELS, load_decisions, save_decisions
from nlp.corpus.CompoundExtractor import (extract_test_candidates, load_triples, mask_test_occurrences,
                                          save_triples, unique_triples)
from nlp.corpus.PairCountTable import parse_scheme, save_counts
from nlp.corpus.TokenStream import PLAIN, TAGGED
from nlp.evaluation.Annotations import load_annotations
from nlp.evaluation.Evaluator import baseline_left, paired_significance, score
from nlp.model.Estimator import NORMALIZERS
from nlp.model.ParameterTable import CONCEPTUAL, LEXICAL, PARAMETERISATIONS, load_params, save_params
from nlp.pipeline.BracketingPipeline import TUNINGS, BracketingPipeline, RunConfig

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(message)s"
RUN_LOG = "run.log"


def _split(value: str) -> List[str]:
    return [item for item in value.replace(",", " ").split() if item]


def _scheme(value: str):
    try:
        return parse_scheme(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _corpus_options(parser: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        parser.add_argument("corpus", nargs="+", help="Corpus text file(s)")
    parser.add_argument("--lexicon", help="Noun lexicon, one noun per line (plain corpora)")
    parser.add_argument("--tagged", action="store_true", help="Corpus tokens are word/TAG")
    parser.add_argument("--noun-tags", type=_split, default=None,
                        help="Comma separated tags counted as nouns in tagged corpora")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Settings file (default: $BRACKET_CONFIG or config/bracket.ini)")
    level = common.add_mutually_exclusive_group()
    level.add_argument("--quiet", action="store_true", help="Only report warnings and errors")
    level.add_argument("--verbose", action="store_true", help="Debug logging and progress bars")

    parser = argparse.ArgumentParser(prog="bracket", description="Bracket three-noun compounds "
                                     "with corpus-trained conceptual association statistics")
    commands = parser.add_subparsers(dest="command", required=True)

    train = commands.add_parser("train", parents=[common], help="Count pairs and estimate parameters")
    _corpus_options(train)
    train.add_argument("--thesaurus", help="Thesaurus TSV (conceptual parameters)")
    train.add_argument("--scheme", type=_scheme, default=parse_scheme("pattern"),
                       help="pattern or window:N")
    train.add_argument("--lexical", action="store_true", help="Word-level instead of category parameters")
    train.add_argument("--annotations", help="Gold annotations; their triples are masked out of training")
    train.add_argument("--normalizer", choices=NORMALIZERS, default=None)
    train.add_argument("--workers", type=int, default=1, help="Processes used for counting")
    train.add_argument("--output-dir", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="Bracket test triples")
    analyze.add_argument("triples", help="File of 'n1 n2 n3' lines")
    analyze.add_argument("--params", required=True, help="Parameter file written by train")
    analyze.add_argument("--thesaurus", help="Thesaurus TSV (conceptual parameters)")
    analyze.add_argument("--model", choices=MODELS, default="dependency")
    analyze.add_argument("--tuned", action="store_true", help="Category-size weights and left bias")
    analyze.add_argument("--lexical", action="store_true", help="Parameter file is word-level")
    analyze.add_argument("--left-factor", type=float, default=None)
    analyze.add_argument("--fallback-k", type=float, default=None)
    analyze.add_argument("--output", help="Decision file (default: stdout)")

    score_cmd = commands.add_parser("score", parents=[common], help="Score decisions against gold labels")
    score_cmd.add_argument("decisions", help="Decision file written by analyze")
    score_cmd.add_argument("--annotations", required=True)
    score_cmd.add_argument("--compare", help="Second decision file for a paired sign test")
    score_cmd.add_argument("--json", action="store_true", help="Print the report as JSON")

    sweep = commands.add_parser("sweep", parents=[common], help="Run the scheme x model grid")
    _corpus_options(sweep)
    sweep.add_argument("--thesaurus", required=True)
    sweep.add_argument("--annotations", required=True)
    sweep.add_argument("--schemes", type=_split, default=None, help="e.g. pattern,window:2,window:10")
    sweep.add_argument("--models", type=_split, default=None)
    sweep.add_argument("--tunings", type=_split, default=None, help="untuned,tuned")
    sweep.add_argument("--parameterisations", type=_split, default=None, help="conceptual,lexical")
    sweep.add_argument("--normalizer", choices=NORMALIZERS, default=None)
    sweep.add_argument("--workers", type=int, default=1)
    sweep.add_argument("--output-dir", required=True)

    extract = commands.add_parser("extract-tests", parents=[common], help="List candidate test triples")
    _corpus_options(extract)
    extract.add_argument("--thesaurus", required=True)
    extract.add_argument("--output", help="Triple file (default: stdout)")

    mask = commands.add_parser("mask", parents=[common], help="Write the corpus with test triples broken out")
    _corpus_options(mask)
    source = mask.add_mutually_exclusive_group(required=True)
    source.add_argument("--annotations")
    source.add_argument("--triples")
    mask.add_argument("--output", help="Masked corpus (default: stdout)")
    return parser


@contextlib.contextmanager
def _logging(args):
    """Root logger on stderr, plus run.log in the output directory when there is one."""
    level = logging.WARNING if args.quiet else logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)

    handler = None
    output_dir = getattr(args, "output_dir", None)
    if output_dir:
        os.makedirs(output_dir, exist_ok=True)
        handler = logging.FileHandler(os.path.join(output_dir, RUN_LOG), mode="w", encoding="utf-8")
        handler.setLevel(logging.INFO)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(handler)
    try:
        with logging_redirect_tqdm():
            yield
    finally:
        if handler is not None:
            logging.getLogger().removeHandler(handler)
            handler.close()


@contextlib.contextmanager
def _sink(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as f:
            yield f


def _run_config(args, settings: Settings) -> RunConfig:
    noun_tags = getattr(args, "noun_tags", None) or settings.get_list("Tokenizer", "noun_tags")
    fallback_k = getattr(args, "fallback_k", None)
    return RunConfig(
        corpus_paths=list(getattr(args, "corpus", None) or []),
        mode=TAGGED if getattr(args, "tagged", False) else PLAIN,
        thesaurus_path=getattr(args, "thesaurus", None),
        lexicon_path=getattr(args, "lexicon", None),
        scheme=getattr(args, "scheme", None) or parse_scheme("pattern"),
        model=getattr(args, "model", None) or "dependency",
        tuned=getattr(args, "tuned", False),
        parameterisation=LEXICAL if getattr(args, "lexical", False) else CONCEPTUAL,
        annotation_path=getattr(args, "annotations", None),
        output_dir=getattr(args, "output_dir", None),
        noun_tags=tuple(noun_tags),
        lowercase=settings.get_bool("Tokenizer", "lowercase", True),
        ascii_fold=settings.get_bool("Tokenizer", "ascii_fold", False),
        normalizer=getattr(args, "normalizer", None) or settings.get("Model", "normalizer", "normalized"),
        left_factor=getattr(args, "left_factor", None),
        fallback_k=(settings.get_float("Analyzer", "fallback_k", 1.0) if fallback_k is None else fallback_k),
        tuned_left_factor=settings.get_float("Analyzer", "tuned_left_factor", 2.0),
        workers=getattr(args, "workers", 1),
    )


def cmd_train(args, settings: Settings) -> ExitCode:
    cfg = _run_config(args, settings).validate(need_thesaurus=not args.lexical,
                                               need_annotations=bool(args.annotations))
    pipeline = BracketingPipeline(cfg, settings, verbose=args.verbose)
    counts, params = pipeline.train()

    out = Path(cfg.output_dir)
    slug = str(cfg.scheme).replace(":", "")
    counts_path = out / f"counts_{slug}.tsv"
    params_path = out / f"params_{slug}_{cfg.parameterisation}.tsv"
    with open(counts_path, "w", encoding="utf-8") as f:
        save_counts(counts, f)
    with open(params_path, "w", encoding="utf-8") as f:
        save_params(params, f)
    print(f"{cfg.scheme}: {len(counts)} pairs ({counts.total()} instances) -> {counts_path}; "
          f"{len(params)} {cfg.parameterisation} parameters -> {params_path}")
    return ExitCode.SUCCESS


def cmd_analyze(args, settings: Settings) -> ExitCode:
    cfg = _run_config(args, settings).validate(need_corpus=False, need_thesaurus=not args.lexical)
    if not os.path.isfile(args.params):
        raise ConfigError(f"parameter file not found: {args.params}")
    if not os.path.isfile(args.triples):
        raise ConfigError(f"triple file not found: {args.triples}")

    with open(args.params, encoding="utf-8") as f:
        params = load_params(f)
    if os.path.getsize(args.params) and params.parameterisation != cfg.parameterisation:
        raise ConfigError(f"parameterisation mismatch: {args.params} holds {params.parameterisation} "
                          f"parameters, {cfg.parameterisation} requested")
    # a headerless empty file takes the requested parameterisation
    params.parameterisation = cfg.parameterisation

    with open(args.triples, encoding="utf-8") as f:
        triples = load_triples(f, **cfg.normalization)
    pipeline = BracketingPipeline(cfg, settings, verbose=args.verbose)
    batch = pipeline.analyze(triples, params) if triples else []
    with _sink(args.output) as sink:
        save_decisions(batch, sink)

    failures = getattr(batch, "failures", [])
    logger.info("%d decisions, %d skipped", len(batch), len(failures))
    return ExitCode.PARTIAL_FAILURE if failures else ExitCode.SUCCESS


def cmd_score(args, settings: Settings) -> ExitCode:
    normalization = _run_config(args, settings).normalization
    for path in filter(None, (args.decisions, args.annotations, args.compare)):
        if not os.path.isfile(path):
            raise ConfigError(f"file not found: {path}")
    with open(args.annotations, encoding="utf-8") as f:
        gold = load_annotations(f, **normalization)
    with open(args.decisions, encoding="utf-8") as f:
        decisions = load_decisions(f)

    report = score(decisions, gold, metadata={"decisions": args.decisions})
    print(report.to_json() if args.json else report.to_text())
    print(f"always-left baseline: {baseline_left(gold):.4f}")

    if args.compare:
        with open(args.compare, encoding="utf-8") as f:
            other = load_decisions(f)
        result = paired_significance(decisions, other, gold)
        if result.no_discordant:
            print("sign test: no discordant items, p = 1")
        else:
            better = {"a": args.decisions, "b": args.compare}.get(result.better, "neither")
            print(f"sign test: {result.wins} of {result.discordant} discordant items favour {better}, "
                  f"p = {result.p_value:.4g}")
    return ExitCode.SUCCESS


def cmd_sweep(args, settings: Settings) -> ExitCode:
    cfg = _run_config(args, settings).validate(need_corpus=False, need_lexicon=True, need_annotations=True)
    try:
        schemes = [parse_scheme(s) for s in args.schemes or settings.get_list("Sweep", "schemes")]
    except ValueError as e:
        raise ConfigError(str(e))
    models = args.models or settings.get_list("Sweep", "models")
    tunings = args.tunings or settings.get_list("Sweep", "tunings")
    parameterisations = args.parameterisations or settings.get_list("Sweep", "parameterisations")
    _check_choices("model", models, MODELS)
    _check_choices("tuning", tunings, TUNINGS)
    _check_choices("parameterisation", parameterisations, PARAMETERISATIONS)

    pipeline = BracketingPipeline(cfg, settings, verbose=args.verbose)
    result = pipeline.sweep(schemes, models, tunings, parameterisations)
    print(result.table.to_string())
    if result.failed:
        logger.error("%d of %d cells failed", len(result.failed), len(result.cells))
        return ExitCode.PARTIAL_FAILURE
    return ExitCode.SUCCESS


def _check_choices(what: str, values, allowed) -> None:
    if not values:
        raise ConfigError(f"no {what} selected")
    for value in values:
        if value not in allowed:
            raise ConfigError(f"unknown {what}: {value!r}, expected one of {', '.join(allowed)}")


def cmd_extract_tests(args, settings: Settings) -> ExitCode:
    cfg = _run_config(args, settings).validate()
    pipeline = BracketingPipeline(cfg, settings, verbose=args.verbose)
    candidates = extract_test_candidates(pipeline.read_corpus(), pipeline.thesaurus)
    triples = unique_triples(candidates)
    logger.info("%d candidate occurrences, %d distinct triples", len(candidates), len(triples))
    with _sink(args.output) as sink:
        save_triples(triples, sink)
    return ExitCode.SUCCESS


def cmd_mask(args, settings: Settings) -> ExitCode:
    cfg = _run_config(args, settings).validate(need_thesaurus=False)
    path = args.annotations or args.triples
    if not os.path.isfile(path):
        raise ConfigError(f"file not found: {path}")
    with open(path, encoding="utf-8") as f:
        triples = list(load_annotations(f, **cfg.normalization)) if args.annotations \
            else load_triples(f, **cfg.normalization)

    pipeline = BracketingPipeline(cfg, settings, verbose=args.verbose)
    masked = mask_test_occurrences(pipeline.read_corpus(), triples)
    with _sink(args.output) as sink:
        sink.write(masked.to_text())
    return ExitCode.SUCCESS


COMMANDS = {
    "train": cmd_train,
    "analyze": cmd_analyze,
    "score": cmd_score,
    "sweep": cmd_sweep,
    "extract-tests": cmd_extract_tests,
    "mask": cmd_mask,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code.

    Configuration problems exit with 2, other failures with 1.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.SUCCESS if e.code in (0, None) else ExitCode.USAGE_ERROR

    with _logging(args):
        try:
            settings = Settings(args.config)
            return int(COMMANDS[args.command](args, settings))
        except ConfigError as e:
            logger.error("error: %s", e.message)
            return int(ExitCode.USAGE_ERROR)
        except BracketingError as e:
            logger.error("error: %s", e.message)
            return int(ExitCode.PARTIAL_FAILURE)
        except OSError as e:
            logger.error("error: %s", e)
            return int(ExitCode.PARTIAL_FAILURE)
