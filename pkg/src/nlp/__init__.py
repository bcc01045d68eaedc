"""Noun compound bracketing from corpus association statistics."""

from nlp.preprocessing.Tokenizer import Tokenizer
from nlp.lexicon.Thesaurus import Thesaurus
from nlp.corpus.PairCounter import count_pairs
from nlp.model.Estimator import estimate
from nlp.analysis.CompoundAnalyzer import analyze, analyze_batch
from nlp.evaluation.Evaluator import score
from nlp.pipeline.BracketingPipeline import BracketingPipeline

__all__ = [
    'Tokenizer',
    'Thesaurus',
    'count_pairs',
    'estimate',
    'analyze',
    'analyze_batch',
    'score',
    'BracketingPipeline'
]
