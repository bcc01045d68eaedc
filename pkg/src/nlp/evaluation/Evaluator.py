"""Accuracy, guess rate and paired significance of bracketing decisions."""

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence

import pandas as pd
from scipy.stats import binomtest

from core.utilities.Errors import EvaluationError
from nlp.analysis.CompoundAnalyzer import LEFT, Decision
from nlp.corpus.CompoundExtractor import CompoundTriple
from nlp.evaluation.Annotations import GoldLabel

logger = logging.getLogger(__name__)


@dataclass
class EvalReport:
    n_scored: int
    n_correct: int
    accuracy: float
    guess_rate: float
    left_proportion_gold: float
    left_proportion_predicted: float
    n_guessed: int = 0
    n_fallback: int = 0
    fallback_rate: float = 0.0
    n_excluded: int = 0
    n_missing: int = 0
    missing: List[str] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    def to_text(self) -> str:
        rows = [
            ("scored", self.n_scored),
            ("correct", self.n_correct),
            ("accuracy", f"{self.accuracy:.4f}"),
            ("guess rate", f"{self.guess_rate:.4f}"),
            ("fallback rate", f"{self.fallback_rate:.4f}"),
            ("left (gold)", f"{self.left_proportion_gold:.4f}"),
            ("left (predicted)", f"{self.left_proportion_predicted:.4f}"),
            ("excluded (E/I)", self.n_excluded),
            ("missing", self.n_missing),
        ]
        rows.extend((key, value) for key, value in sorted(self.metadata.items()))
        frame = pd.DataFrame(rows, columns=["metric", "value"]).set_index("metric")
        return frame.to_string(header=False)


@dataclass(frozen=True)
class SignificanceResult:
    p_value: float
    discordant: int
    wins: int
    better: Optional[str]
    no_discordant: bool = False


def score(decisions: Sequence[Decision], gold: Mapping[CompoundTriple, GoldLabel],
          metadata: Optional[Dict[str, Any]] = None) -> EvalReport:
    """Score decisions against gold labels over the left/right-labelled items.

    Args:
        decisions: Analyser output
        gold: Gold label of every triple
        metadata: Echoed into the report

    Returns:
        EvalReport; gold items with no decision are listed in ``missing``

    Raises:
        EvaluationError: A decision has no gold label, or no decision is scorable
    """
    scored = []
    excluded = 0
    decided = set()
    for d in decisions:
        if d.triple not in gold:
            raise EvaluationError(f"no gold label for {d.triple}")
        decided.add(d.triple)
        if gold[d.triple].scored:
            scored.append(d)
        else:
            excluded += 1

    missing = [str(t) for t, label in gold.items() if t not in decided]
    if missing:
        logger.warning("%d gold items have no decision", len(missing))
    if not scored:
        raise EvaluationError("no decisions on left/right-labelled items; accuracy is undefined")

    n = len(scored)
    correct = sum(1 for d in scored if d.branching == gold[d.triple].value)
    guessed = sum(1 for d in scored if d.guessed)
    fallback = sum(1 for d in scored if d.fallback_used)
    gold_left = sum(1 for d in scored if gold[d.triple] is GoldLabel.LEFT)
    predicted_left = sum(1 for d in scored if d.branching == LEFT)

    return EvalReport(
        n_scored=n,
        n_correct=correct,
        accuracy=correct / n,
        guess_rate=guessed / n,
        left_proportion_gold=gold_left / n,
        left_proportion_predicted=predicted_left / n,
        n_guessed=guessed,
        n_fallback=fallback,
        fallback_rate=fallback / n,
        n_excluded=excluded,
        n_missing=len(missing),
        missing=missing,
        metadata=dict(metadata or {}),
    )


def baseline_left(gold: Mapping[CompoundTriple, GoldLabel]) -> float:
    """Accuracy of always choosing left-branching on the left/right-labelled items.

    Raises:
        EvaluationError: No item is labelled L or R
    """
    labels = [label for label in gold.values() if label.scored]
    if not labels:
        raise EvaluationError("no left/right-labelled items")
    return sum(1 for label in labels if label is GoldLabel.LEFT) / len(labels)


def paired_significance(decisions_a: Sequence[Decision], decisions_b: Sequence[Decision],
                        gold: Mapping[CompoundTriple, GoldLabel]) -> SignificanceResult:
    """Exact one-sided sign test on the items where exactly one model is right.

    Args:
        decisions_a: Decisions of model A
        decisions_b: Decisions of model B on the same items
        gold: Gold labels

    Returns:
        SignificanceResult with p = P(X >= wins), X ~ Binomial(discordant, 1/2),
        wins being the discordant items won by the better model

    Raises:
        EvaluationError: The two models were not scored on the same items
    """
    a = _correctness(decisions_a, gold)
    b = _correctness(decisions_b, gold)
    if a.keys() != b.keys():
        raise EvaluationError("models were scored on different item sets")

    a_wins = sum(1 for t in a if a[t] and not b[t])
    b_wins = sum(1 for t in a if b[t] and not a[t])
    d = a_wins + b_wins
    if d == 0:
        return SignificanceResult(1.0, 0, 0, None, no_discordant=True)

    wins = max(a_wins, b_wins)
    better = "a" if a_wins > b_wins else "b" if b_wins > a_wins else None
    p = binomtest(wins, d, 0.5, alternative="greater").pvalue
    return SignificanceResult(float(p), d, wins, better)


def _correctness(decisions, gold) -> Dict[CompoundTriple, bool]:
    result = {}
    for d in decisions:
        if d.triple not in gold:
            raise EvaluationError(f"no gold label for {d.triple}")
        if gold[d.triple].scored:
            result[d.triple] = d.branching == gold[d.triple].value
    return result
