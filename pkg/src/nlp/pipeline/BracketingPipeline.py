"""End-to-end pipeline: corpus ingestion, training, analysis, scoring and scheme sweeps."""

import json
import logging
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pandas as pd
from tqdm import tqdm

from core.utilities.Errors import BracketingError, ConfigError
from core.utilities.Settings import Settings
from nlp.analysis.CompoundAnalyzer import (ADJACENCY, DEPENDENCY, MODELS, AnalyzerConfig,
                                           DecisionBatch, analyze_batch, save_decisions)
from nlp.corpus.CompoundExtractor import CompoundTriple, mask_test_occurrences
from nlp.corpus.PairCountTable import PairCountTable, Scheme, parse_scheme, save_counts
from nlp.corpus.PairCounter import count_pairs
from nlp.corpus.TokenStream import BREAK, PLAIN, TAGGED, TokenStream
from nlp.evaluation.Annotations import GoldLabel, load_annotations
from nlp.evaluation.Evaluator import EvalReport, score
from nlp.lexicon.NounLexicon import NounLexicon, load_lexicon
from nlp.lexicon.Thesaurus import Thesaurus, load_thesaurus
from nlp.model.Estimator import NORMALIZERS, estimate
from nlp.model.ParameterTable import CONCEPTUAL, LEXICAL, PARAMETERISATIONS, ParameterTable, save_params
from nlp.preprocessing.Tokenizer import Tokenizer

logger = logging.getLogger(__name__)

UNTUNED = "untuned"
TUNED = "tuned"
TUNINGS = (UNTUNED, TUNED)


@dataclass
class RunConfig:
    """Everything a train, analyze or sweep run needs; CLI flags fill it in."""
    corpus_paths: List[str] = field(default_factory=list)
    mode: str = PLAIN
    thesaurus_path: Optional[str] = None
    lexicon_path: Optional[str] = None
    scheme: Scheme = field(default_factory=lambda: parse_scheme("pattern"))
    model: str = DEPENDENCY
    tuned: bool = False
    parameterisation: str = CONCEPTUAL
    annotation_path: Optional[str] = None
    output_dir: Optional[str] = None
    noun_tags: Tuple[str, ...] = ("NN", "NNS", "NNP", "NNPS")
    lowercase: bool = True
    ascii_fold: bool = False
    normalizer: str = "normalized"
    left_factor: Optional[float] = None
    fallback_k: float = 1.0
    tuned_left_factor: float = 2.0
    workers: int = 1

    def validate(self, need_corpus: bool = True, need_thesaurus: bool = True,
                 need_annotations: bool = False, need_lexicon: Optional[bool] = None) -> "RunConfig":
        """Check values and that required input files exist.

        Args:
            need_corpus: Corpus files must exist
            need_thesaurus: Thesaurus file must exist
            need_annotations: Annotation file must exist
            need_lexicon: Noun lexicon must exist in plain mode; follows ``need_corpus`` when None

        Raises:
            ConfigError: On the first problem found
        """
        if self.mode not in (PLAIN, TAGGED):
            raise ConfigError(f"unknown corpus mode: {self.mode!r}")
        if self.parameterisation not in PARAMETERISATIONS:
            raise ConfigError(f"unknown parameterisation: {self.parameterisation!r}")
        if self.model not in MODELS:
            raise ConfigError(f"unknown model: {self.model!r}")
        if self.normalizer not in NORMALIZERS:
            raise ConfigError(f"unknown normalizer: {self.normalizer!r}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        self.analyzer_config(self.model, self.tuned)

        if need_corpus:
            if not self.corpus_paths:
                raise ConfigError("no corpus given")
            for path in self.corpus_paths:
                _require_file(path, "corpus")
        if (need_corpus if need_lexicon is None else need_lexicon) and self.mode == PLAIN:
            _require_file(self.lexicon_path, "noun lexicon")
        if need_thesaurus:
            _require_file(self.thesaurus_path, "thesaurus")
        if need_annotations:
            _require_file(self.annotation_path, "annotation file")
        return self

    @property
    def normalization(self) -> Dict[str, bool]:
        """Word normalisation keywords shared by the tokenizer and every file loader."""
        return {"lowercase": self.lowercase, "ascii_fold": self.ascii_fold}

    def analyzer_config(self, model: str, tuned: bool) -> AnalyzerConfig:
        return AnalyzerConfig(model=model, tuned=tuned, left_factor=self.left_factor,
                              fallback_k=self.fallback_k, tuned_left_factor=self.tuned_left_factor)


def _require_file(path: Optional[str], what: str) -> None:
    if not path:
        raise ConfigError(f"no {what} path given")
    if not os.path.isfile(path):
        raise ConfigError(f"{what} not found: {path}")


@dataclass
class SweepCell:
    scheme: str
    model: str
    tuning: str
    parameterisation: str
    report: Optional[EvalReport] = None
    error: Optional[str] = None

    @property
    def column(self) -> str:
        return f"{self.model}/{self.tuning}/{self.parameterisation}"

    @property
    def slug(self) -> str:
        return f"{_slug(self.scheme)}_{self.model}_{self.tuning}_{self.parameterisation}"


@dataclass
class SweepResult:
    cells: List[SweepCell]
    table: pd.DataFrame

    @property
    def failed(self) -> List[SweepCell]:
        return [cell for cell in self.cells if cell.error is not None]


def _slug(scheme) -> str:
    return str(scheme).replace(":", "")


class BracketingPipeline:
    """Pipeline for training association models and bracketing noun compounds."""

    def __init__(self, config: RunConfig, settings: Optional[Settings] = None, verbose: bool = False):
        """Initialize the pipeline.

        Args:
            config: Run configuration
            settings: Master settings; supplies tokenizer punctuation
            verbose: Whether to show progress bars
        """
        self.config = config
        self.settings = settings or Settings()
        self.verbose = verbose
        self._thesaurus: Optional[Thesaurus] = None
        self._lexicon: Optional[NounLexicon] = None

    @property
    def thesaurus(self) -> Thesaurus:
        if self._thesaurus is None:
            with open(self.config.thesaurus_path, encoding="utf-8") as f:
                self._thesaurus = load_thesaurus(f, **self.config.normalization)
            logger.info("loaded thesaurus %s: %d categories", self.config.thesaurus_path, len(self._thesaurus))
        return self._thesaurus

    @property
    def lexicon(self) -> NounLexicon:
        if self._lexicon is None:
            if self.config.lexicon_path:
                with open(self.config.lexicon_path, encoding="utf-8") as f:
                    self._lexicon = load_lexicon(f, **self.config.normalization)
                logger.info("loaded noun lexicon %s: %d nouns", self.config.lexicon_path, len(self._lexicon))
            else:
                self._lexicon = NounLexicon()
        return self._lexicon

    def tokenizer(self) -> Tokenizer:
        return Tokenizer(
            self.lexicon if self.config.mode == PLAIN else None,
            noun_tags=self.config.noun_tags,
            sentence_end=self.settings.get_list("Tokenizer", "sentence_end", sep=r"\s+"),
            clause_punctuation=self.settings.get_list("Tokenizer", "clause_punctuation", sep=r"\s+"),
            **self.config.normalization,
        )

    def read_corpus(self) -> TokenStream:
        """Tokenise every corpus file into one stream, with a break between files.

        Raises:
            OSError: A corpus file cannot be read
            ParseError: A tagged corpus token is malformed
        """
        tokenizer = self.tokenizer()
        stream = TokenStream(mode=self.config.mode)
        paths = self.config.corpus_paths
        iterator = tqdm(paths, desc="Reading corpus", unit="file") if self.verbose else paths
        for path in iterator:
            with open(path, encoding="utf-8") as f:
                part = tokenizer.tokenize(f.read(), self.config.mode, source=path)
            logger.info("read %s: %d tokens", path, len(part))
            for token in part:
                stream.append(token)
            stream.append(BREAK)
        stream.finish()
        return stream

    def load_gold(self) -> Dict[CompoundTriple, GoldLabel]:
        with open(self.config.annotation_path, encoding="utf-8") as f:
            return load_annotations(f, **self.config.normalization)

    def count(self, stream: TokenStream, scheme: Scheme) -> PairCountTable:
        counts = count_pairs(stream, scheme, self.config.workers, self.verbose)
        logger.info("%s: %d distinct pairs, %d instances", scheme, len(counts), counts.total())
        return counts

    def estimate(self, counts: PairCountTable, parameterisation: str,
                 triples: Optional[List[CompoundTriple]] = None) -> ParameterTable:
        """Estimate parameters; lexical training is restricted to the test words when given."""
        vocabulary = None
        if parameterisation == LEXICAL and triples:
            vocabulary = {w for t in triples for w in t.words}
        th = self.thesaurus if parameterisation == CONCEPTUAL else None
        return estimate(counts, th, parameterisation, self.config.normalizer, vocabulary, self.verbose)

    def train(self, stream: Optional[TokenStream] = None) -> Tuple[PairCountTable, ParameterTable]:
        """Count and estimate with the configured scheme and parameterisation.

        Test compounds from the annotation file, when configured, are masked
        out of the training stream first.
        """
        stream = stream if stream is not None else self.read_corpus()
        triples = None
        if self.config.annotation_path:
            triples = list(self.load_gold())
            stream = mask_test_occurrences(stream, triples)
        counts = self.count(stream, self.config.scheme)
        params = self.estimate(counts, self.config.parameterisation, triples)
        return counts, params

    def analyze(self, triples: List[CompoundTriple], params: ParameterTable,
                cfg: Optional[AnalyzerConfig] = None) -> DecisionBatch:
        cfg = cfg or self.config.analyzer_config(self.config.model, self.config.tuned)
        th = self.thesaurus if params.parameterisation == CONCEPTUAL else None
        batch = analyze_batch(triples, params, th, cfg, self.verbose)
        if batch.failures:
            logger.warning("%s: %d of %d triples skipped", cfg.label(), len(batch.failures), len(triples))
        return batch

    def sweep(self, schemes: List[Scheme], models=(ADJACENCY, DEPENDENCY), tunings=(UNTUNED,),
              parameterisations=(CONCEPTUAL,)) -> SweepResult:
        """Train, analyse and score every scheme x parameterisation x model x tuning cell.

        A failing cell is recorded with its error and the sweep carries on.
        Artifacts go to the configured output directory when one is set.

        Returns:
            SweepResult with one row per scheme in the summary table
        """
        gold = self.load_gold()
        triples = list(gold)
        out = Path(self.config.output_dir) if self.config.output_dir else None
        if out is not None:
            out.mkdir(parents=True, exist_ok=True)

        try:
            stream: Optional[TokenStream] = mask_test_occurrences(self.read_corpus(), triples)
            corpus_error = None
        except (BracketingError, OSError) as e:
            stream, corpus_error = None, _message(e)
            logger.error("corpus unavailable: %s", corpus_error)

        cells: List[SweepCell] = []
        grid = [(scheme, p, m, t) for scheme in schemes for p in parameterisations
                for m in models for t in tunings]
        iterator = tqdm(grid, desc="Sweep", unit="cell") if self.verbose else grid

        counts_cache: Dict[Scheme, PairCountTable] = {}
        params_cache: Dict[Tuple[Scheme, str], ParameterTable] = {}
        for scheme, parameterisation, model, tuning in iterator:
            cell = SweepCell(str(scheme), model, tuning, parameterisation)
            cells.append(cell)
            try:
                if corpus_error is not None:
                    raise BracketingError(corpus_error)
                if scheme not in counts_cache:
                    counts_cache[scheme] = self.count(stream, scheme)
                    self._write(out, f"counts_{_slug(scheme)}.tsv", save_counts, counts_cache[scheme])
                key = (scheme, parameterisation)
                if key not in params_cache:
                    params_cache[key] = self.estimate(counts_cache[scheme], parameterisation, triples)
                    self._write(out, f"params_{_slug(scheme)}_{parameterisation}.tsv", save_params,
                                params_cache[key])

                cfg = self.config.analyzer_config(model, tuning == TUNED)
                batch = self.analyze(triples, params_cache[key], cfg)
                self._write(out, f"decisions_{cell.slug}.tsv", save_decisions, batch)
                cell.report = score(batch, gold, metadata={
                    "scheme": cell.scheme, "model": model, "tuning": tuning,
                    "parameterisation": parameterisation, "skipped": len(batch.failures),
                })
            except (BracketingError, OSError, ValueError) as e:
                cell.error = _message(e)
                logger.warning("cell %s %s failed: %s", cell.scheme, cell.column, cell.error)

        result = SweepResult(cells, self._table(cells, schemes))
        if out is not None:
            with open(out / "sweep.json", "w", encoding="utf-8") as f:
                json.dump([_cell_record(c) for c in cells], f, indent=2, sort_keys=True)
                f.write("\n")
            with open(out / "sweep.txt", "w", encoding="utf-8") as f:
                f.write(result.table.to_string() + "\n")
        return result

    @staticmethod
    def _table(cells: List[SweepCell], schemes: List[Scheme]) -> pd.DataFrame:
        rows: Dict[str, Dict[str, str]] = {str(s): {} for s in schemes}
        for cell in cells:
            row = rows[cell.scheme]
            if cell.error is not None:
                row[f"{cell.column} acc"] = "FAILED"
                row[f"{cell.column} guess"] = cell.error
            else:
                row[f"{cell.column} acc"] = f"{cell.report.accuracy:.4f}"
                row[f"{cell.column} guess"] = f"{cell.report.guess_rate:.4f}"
        columns = []
        for cell in cells:
            for suffix in ("acc", "guess"):
                name = f"{cell.column} {suffix}"
                if name not in columns:
                    columns.append(name)
        frame = pd.DataFrame.from_dict(rows, orient="index", columns=columns)
        frame.index.name = "scheme"
        return frame

    @staticmethod
    def _write(out: Optional[Path], name: str, writer, obj) -> None:
        if out is None:
            return
        with open(out / name, "w", encoding="utf-8") as f:
            writer(obj, f)


def _message(e: Exception) -> str:
    return e.message if isinstance(e, BracketingError) else str(e)


def _cell_record(cell: SweepCell) -> dict:
    record = {
        "scheme": cell.scheme,
        "model": cell.model,
        "tuning": cell.tuning,
        "parameterisation": cell.parameterisation,
        "error": cell.error,
    }
    if cell.report is not None:
        record["report"] = asdict(cell.report)
    return record
