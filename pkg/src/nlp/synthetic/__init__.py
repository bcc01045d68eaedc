"""Synthetic corpora with known bracketing ground truth."""

from nlp.synthetic.CorpusGenerator import CorpusGenerator, SyntheticCorpus

__all__ = ['CorpusGenerator', 'SyntheticCorpus']
