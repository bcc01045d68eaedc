"""Adjacency and dependency bracketing of three-noun compounds."""

import logging
import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, FrozenSet, List, Optional, TextIO, Tuple

from tqdm import tqdm

from core.utilities.Errors import BracketingError, ConfigError, ParseError, UnknownWordError
from nlp.corpus.CompoundExtractor import CompoundTriple
from nlp.lexicon.Thesaurus import Thesaurus
from nlp.model.ParameterTable import LEXICAL, ParameterTable

logger = logging.getLogger(__name__)

ADJACENCY = "adjacency"
DEPENDENCY = "dependency"
MODELS = (ADJACENCY, DEPENDENCY)

LEFT = "L"
RIGHT = "R"

# Why the analyser had to guess
NO_GUESS = "none"
TIE = "tie"
NO_DATA = "no_data"


@dataclass(frozen=True)
class AnalyzerConfig:
    """Analysis model and tuning.

    ``left_factor`` left as None resolves to ``tuned_left_factor`` when tuned
    and to 1 otherwise.
    """
    model: str = DEPENDENCY
    tuned: bool = False
    left_factor: Optional[float] = None
    fallback_k: float = 1.0
    tuned_left_factor: float = 2.0

    def __post_init__(self):
        if self.model not in MODELS:
            raise ConfigError(f"unknown model: {self.model!r}")
        if self.left_factor is not None and not self.left_factor > 0:
            raise ConfigError(f"left_factor must be positive, got {self.left_factor}")
        if not self.fallback_k > 0:
            raise ConfigError(f"fallback_k must be positive, got {self.fallback_k}")
        if not self.tuned_left_factor > 0:
            raise ConfigError(f"tuned_left_factor must be positive, got {self.tuned_left_factor}")

    @property
    def effective_left_factor(self) -> float:
        if self.left_factor is not None:
            return self.left_factor
        return self.tuned_left_factor if self.tuned else 1.0

    def label(self) -> str:
        return f"{self.model}/{'tuned' if self.tuned else 'untuned'}"


@dataclass(frozen=True)
class Ratio:
    """Left versus right support, kept unreduced so 0/0 stays distinct from x/0."""
    numerator: float
    denominator: float

    def __post_init__(self):
        if not (0.0 <= self.numerator < float("inf") and 0.0 <= self.denominator < float("inf")):
            raise ValueError(f"ratio terms must be finite and non-negative: {self}")


@dataclass(frozen=True)
class Decision:
    triple: CompoundTriple
    branching: str
    guessed: bool
    ratio: Ratio
    fallback_used: bool = False
    guess_reason: str = NO_GUESS


def _category_lookup(pt: ParameterTable, th: Optional[Thesaurus]) -> Tuple[Callable, Callable]:
    """Category membership and size for the table's parameterisation.

    Lexical tables treat every word as a singleton category, so unseen words
    simply have zero support.
    """
    if pt.parameterisation == LEXICAL:
        return (lambda word: frozenset((word,))), (lambda category: 1)
    if th is None:
        raise ConfigError("a thesaurus is required for conceptual parameters")

    def cats(word: str) -> FrozenSet[str]:
        found = th.cats(word)
        if not found:
            raise UnknownWordError(word)
        return found

    return cats, th.category_size


def _expansion(triple, pt, th, cfg):
    cats, size = _category_lookup(pt, th)
    # sorted for a reproducible summation order
    c1, c2, c3 = (sorted(cats(w)) for w in triple.words)
    for t1, t2, t3 in product(c1, c2, c3):
        weight = 1.0 / (size(t1) * size(t2) * size(t3)) if cfg.tuned else 1.0
        yield t1, t2, t3, weight


def adjacency_ratio(triple: CompoundTriple, pt: ParameterTable, th: Optional[Thesaurus],
                    cfg: AnalyzerConfig) -> Ratio:
    """Compare Pr(t1 -> t2) against Pr(t2 -> t3), summed over all category assignments.

    Raises:
        UnknownWordError: A word has no thesaurus category (conceptual tables)
    """
    terms = [(pt.prob(t1, t2) * weight, pt.prob(t2, t3) * weight)
             for t1, t2, t3, weight in _expansion(triple, pt, th, cfg)]
    left = math.fsum(p12 for p12, _ in terms)
    right = math.fsum(p23 for _, p23 in terms)
    return Ratio(cfg.effective_left_factor * left, right)


def dependency_ratio(triple: CompoundTriple, pt: ParameterTable, th: Optional[Thesaurus],
                     cfg: AnalyzerConfig) -> Tuple[Ratio, bool]:
    """Compare Pr(t1 -> t2) against Pr(t1 -> t3), both times Pr(t2 -> t3).

    When Pr(t2 -> t3) is zero for every assignment the sums are recomputed
    with that factor set to ``cfg.fallback_k``.

    Returns:
        (ratio, whether the fallback was used)

    Raises:
        UnknownWordError: A word has no thesaurus category (conceptual tables)
    """
    terms = [(pt.prob(t1, t2), pt.prob(t1, t3), pt.prob(t2, t3), weight)
             for t1, t2, t3, weight in _expansion(triple, pt, th, cfg)]

    fallback = all(p23 == 0.0 for _, _, p23, _ in terms)
    if fallback:
        # k is a common factor of every term
        left = cfg.fallback_k * math.fsum(p12 * weight for p12, _, _, weight in terms)
        right = cfg.fallback_k * math.fsum(p13 * weight for _, p13, _, weight in terms)
    else:
        left = math.fsum(p12 * p23 * weight for p12, _, p23, weight in terms)
        right = math.fsum(p13 * p23 * weight for _, p13, p23, weight in terms)
    return Ratio(cfg.effective_left_factor * left, right), fallback


def decide(r: Ratio, cfg: Optional[AnalyzerConfig] = None) -> Tuple[str, bool, str]:
    """Choose a bracketing from a ratio.

    Greater than unity is left-branching, less is right-branching; a tie,
    including 0/0, is a left-branching guess.

    Returns:
        (branching, guessed, guess reason)
    """
    if r.numerator > r.denominator:
        return LEFT, False, NO_GUESS
    if r.numerator < r.denominator:
        return RIGHT, False, NO_GUESS
    return LEFT, True, NO_DATA if r.numerator == 0.0 else TIE


def analyze(triple: CompoundTriple, pt: ParameterTable, th: Optional[Thesaurus],
            cfg: AnalyzerConfig) -> Decision:
    """Analyse one triple under the configured model."""
    fallback = False
    if cfg.model == ADJACENCY:
        ratio = adjacency_ratio(triple, pt, th, cfg)
    else:
        ratio, fallback = dependency_ratio(triple, pt, th, cfg)
    branching, guessed, reason = decide(ratio, cfg)
    return Decision(triple, branching, guessed, ratio, fallback, reason)


class DecisionBatch(list):
    """Decisions in input order, plus the triples that could not be analysed."""

    def __init__(self, decisions=()):
        list.__init__(self, decisions)
        self.failures: List[Tuple[CompoundTriple, BracketingError]] = []


def analyze_batch(triples, pt: ParameterTable, th: Optional[Thesaurus], cfg: AnalyzerConfig,
                  verbose: bool = False) -> DecisionBatch:
    """Analyse every triple; a failing triple is recorded in ``failures`` and skipped.

    Args:
        triples: Test compounds
        pt: Parameter table
        th: Thesaurus, unused for lexical tables
        cfg: Analyzer configuration
        verbose: Whether to show progress

    Returns:
        DecisionBatch in input order
    """
    batch = DecisionBatch()
    iterator = tqdm(triples, desc=f"Analysing ({cfg.label()})", unit="triple") if verbose else triples
    for triple in iterator:
        try:
            batch.append(analyze(triple, pt, th, cfg))
        except BracketingError as e:
            batch.failures.append((triple, e))
            logger.warning("skipping %s: %s", triple, e.message)
    return batch


def save_decisions(decisions, sink: TextIO) -> None:
    """Write ``n1 n2 n3<TAB>L|R<TAB>guessed<TAB>fallback<TAB>num<TAB>den`` lines."""
    for d in decisions:
        sink.write(f"{d.triple}\t{d.branching}\t{int(d.guessed)}\t{int(d.fallback_used)}\t"
                   f"{d.ratio.numerator:.17g}\t{d.ratio.denominator:.17g}\n")


def load_decisions(source: TextIO, name: Optional[str] = None) -> List[Decision]:
    """Read decisions written by ``save_decisions``.

    Raises:
        ParseError: On a malformed line
    """
    name = name or getattr(source, "name", None)
    decisions = []
    for number, line in enumerate(source, start=1):
        line = line.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        words = fields[0].split()
        if len(fields) != 6 or len(words) != 3 or fields[1] not in (LEFT, RIGHT) \
                or fields[2] not in ("0", "1") or fields[3] not in ("0", "1"):
            raise ParseError("expected 'n1 n2 n3<TAB>L|R<TAB>guessed<TAB>fallback<TAB>num<TAB>den'",
                             name, number)
        try:
            ratio = Ratio(float(fields[4]), float(fields[5]))
        except ValueError as e:
            raise ParseError(str(e), name, number) from None
        _, _, reason = decide(ratio)
        decisions.append(Decision(CompoundTriple(*words), fields[1], fields[2] == "1", ratio,
                                  fields[3] == "1", reason if fields[2] == "1" else NO_GUESS))
    return decisions
