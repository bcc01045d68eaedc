"""Scoring of bracketing decisions against gold annotations."""

from nlp.evaluation.Annotations import GoldLabel, load_annotations, save_annotations, label_distribution
from nlp.evaluation.Evaluator import (EvalReport, SignificanceResult, score, baseline_left,
                                      paired_significance)

__all__ = [
    'GoldLabel', 'load_annotations', 'save_annotations', 'label_distribution',
    'EvalReport', 'SignificanceResult', 'score', 'baseline_left', 'paired_significance',
]
