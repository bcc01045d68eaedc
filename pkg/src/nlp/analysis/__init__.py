"""Noun compound bracketing decisions."""

from nlp.analysis.CompoundAnalyzer import (AnalyzerConfig, Ratio, Decision, DecisionBatch,
                                           adjacency_ratio, dependency_ratio, decide, analyze,
                                           analyze_batch, save_decisions, load_decisions,
                                           ADJACENCY, DEPENDENCY, LEFT, RIGHT)

__all__ = [
    'AnalyzerConfig', 'Ratio', 'Decision', 'DecisionBatch',
    'adjacency_ratio', 'dependency_ratio', 'decide', 'analyze', 'analyze_batch',
    'save_decisions', 'load_decisions', 'ADJACENCY', 'DEPENDENCY', 'LEFT', 'RIGHT',
]
