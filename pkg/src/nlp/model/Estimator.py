"""Estimation of conceptual and lexical association parameters from pair counts."""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Optional, Tuple

from tqdm import tqdm

from nlp.corpus.PairCountTable import PairCountTable
from nlp.lexicon.Thesaurus import Thesaurus
from nlp.model.ParameterTable import CONCEPTUAL, LEXICAL, ParameterTable

logger = logging.getLogger(__name__)

NORMALIZED = "normalized"
PRINTED = "printed"
NORMALIZERS = (NORMALIZED, PRINTED)


def estimate_conceptual(counts: PairCountTable, th: Thesaurus,
                        normalizer: str = NORMALIZED, verbose: bool = False) -> ParameterTable:
    """Estimate Pr(t1 -> t2) by pooling word-pair counts over thesaurus categories.

    Each count is split evenly across the categories of both words, i.e.
    divided by ambig(w1) * ambig(w2). Pairs involving a word outside the
    thesaurus are ignored. Sums are kept as exact fractions and rounded once.

    Args:
        counts: Pair counts from a training scheme
        th: Thesaurus supplying the categories
        normalizer: ``normalized`` divides by the total over modifier
            categories so every head sums to one; ``printed`` divides by the
            per-word sum, which differs when modifiers are ambiguous
        verbose: Whether to show progress

    Returns:
        ParameterTable; heads with no evidence are absent
    """
    if normalizer not in NORMALIZERS:
        raise ValueError(f"unknown normalizer: {normalizer!r}")

    numerators: Dict[Tuple[str, str], Fraction] = defaultdict(Fraction)
    printed_eta: Dict[str, Fraction] = defaultdict(Fraction)
    skipped = 0

    items = counts.items()
    if verbose:
        items = tqdm(list(items), desc="Estimating", unit="pair")

    for (w1, w2), count in items:
        if count <= 0:
            continue
        cats1, cats2 = th.cats(w1), th.cats(w2)
        if not cats1 or not cats2:
            skipped += 1
            continue
        share = Fraction(count, len(cats1) * len(cats2))
        for t2 in cats2:
            printed_eta[t2] += share
            for t1 in cats1:
                numerators[(t1, t2)] += share

    if normalizer == NORMALIZED:
        eta: Dict[str, Fraction] = defaultdict(Fraction)
        for (_, t2), value in numerators.items():
            eta[t2] += value
    else:
        eta = printed_eta

    pt = ParameterTable(parameterisation=CONCEPTUAL)
    for (t1, t2), value in numerators.items():
        pt.params[(t1, t2)] = float(value / eta[t2])
    for t2, value in eta.items():
        if value > 0:
            pt.head_norms[t2] = float(value)

    if skipped:
        logger.debug("%d counted pairs involve words outside the thesaurus", skipped)
    logger.info("estimated %d parameters over %d head categories", len(pt.params), len(pt.head_norms))
    return pt


def estimate_lexical(counts: PairCountTable, vocabulary=None,
                     verbose: bool = False) -> ParameterTable:
    """Estimate word-to-word parameters: every observed word is its own category.

    Args:
        counts: Pair counts from a training scheme
        vocabulary: Optional word set; only pairs of two such words are used
        verbose: Whether to show progress

    Returns:
        ParameterTable with the ``lexical`` parameterisation
    """
    if vocabulary is not None:
        counts = counts.restrict_to(vocabulary)
    pt = estimate_conceptual(counts, Thesaurus.singletons(counts.words()), verbose=verbose)
    pt.parameterisation = LEXICAL
    return pt


def estimate(counts: PairCountTable, th: Optional[Thesaurus], parameterisation: str,
             normalizer: str = NORMALIZED, vocabulary=None, verbose: bool = False) -> ParameterTable:
    """Dispatch to the conceptual or lexical estimator."""
    if parameterisation == LEXICAL:
        return estimate_lexical(counts, vocabulary, verbose)
    return estimate_conceptual(counts, th, normalizer, verbose)
