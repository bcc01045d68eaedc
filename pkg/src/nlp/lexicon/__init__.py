"""Thesaurus and noun lexicon."""

from nlp.lexicon.Thesaurus import Thesaurus, load_thesaurus, dump_thesaurus
from nlp.lexicon.NounLexicon import NounLexicon, load_lexicon

__all__ = ['Thesaurus', 'load_thesaurus', 'dump_thesaurus', 'NounLexicon', 'load_lexicon']
