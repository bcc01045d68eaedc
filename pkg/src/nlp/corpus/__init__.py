"""Token streams, training counts and test compound extraction."""

from nlp.corpus.TokenStream import Token, TokenStream, BREAK, PLAIN, TAGGED
from nlp.corpus.PairCountTable import PairCountTable, Scheme, PATTERN, parse_scheme, save_counts, load_counts
from nlp.corpus.PairCounter import pattern_counts, window_counts, count_pairs
from nlp.corpus.CompoundExtractor import (CompoundTriple, extract_test_candidates, mask_test_occurrences,
                                          unique_triples, save_triples, load_triples)

__all__ = [
    'Token', 'TokenStream', 'BREAK', 'PLAIN', 'TAGGED',
    'PairCountTable', 'Scheme', 'PATTERN', 'parse_scheme', 'save_counts', 'load_counts',
    'pattern_counts', 'window_counts', 'count_pairs',
    'CompoundTriple', 'extract_test_candidates', 'mask_test_occurrences',
    'unique_triples', 'save_triples', 'load_triples',
]
