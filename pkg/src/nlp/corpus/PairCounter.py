"""Training-count extraction under the pattern and window schemes."""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from operator import add
from typing import Iterable, List

from nltk.util import ngrams
from tqdm import tqdm

from nlp.corpus.PairCountTable import PATTERN, PairCountTable, Scheme
from nlp.corpus.TokenStream import Token, TokenStream

logger = logging.getLogger(__name__)


def _sentences(ts: TokenStream, verbose: bool) -> Iterable[List[Token]]:
    sentences = ts.sentences()
    return tqdm(sentences, desc="Counting", unit="sentence") if verbose else sentences


def pattern_counts(ts: TokenStream, verbose: bool = False) -> PairCountTable:
    """Count (w2, w3) for every four-token window flagged non-noun, noun, noun, non-noun.

    Args:
        ts: Token stream; windows never cross sentence breaks
        verbose: Whether to show progress

    Returns:
        PairCountTable with scheme ``pattern``
    """
    table = PairCountTable(PATTERN)
    for sentence in _sentences(ts, verbose):
        for w1, w2, w3, w4 in ngrams(sentence, 4):
            if not w1.is_noun and w2.is_noun and w3.is_noun and not w4.is_noun:
                table.add(w2.word, w3.word)
    return table


def window_counts(ts: TokenStream, n: int, verbose: bool = False) -> PairCountTable:
    """Count ordered noun pairs at most ``n - 1`` tokens apart within a sentence.

    Only the two endpoints must be nouns; intervening tokens are unrestricted.

    Args:
        ts: Token stream
        n: Window width, at least 2
        verbose: Whether to show progress

    Returns:
        PairCountTable with scheme ``window:n``

    Raises:
        ValueError: If ``n < 2``
    """
    if n < 2:
        raise ValueError(f"window width must be >= 2, got {n}")

    table = PairCountTable(Scheme("window", n))
    for sentence in _sentences(ts, verbose):
        length = len(sentence)
        for p, left in enumerate(sentence):
            if not left.is_noun:
                continue
            for q in range(p + 1, min(p + n, length)):
                right = sentence[q]
                if right.is_noun:
                    table.add(left.word, right.word)
    return table


def _count_shard(args) -> PairCountTable:
    ts, scheme = args
    if scheme.kind == "pattern":
        return pattern_counts(ts)
    return window_counts(ts, scheme.width)


def count_pairs(ts: TokenStream, scheme: Scheme, workers: int = 1,
                verbose: bool = False) -> PairCountTable:
    """Count pairs under ``scheme``, optionally over sentence-respecting shards in parallel.

    Args:
        ts: Token stream
        scheme: Training scheme
        workers: Number of worker processes; 1 counts in-process
        verbose: Whether to show progress

    Returns:
        PairCountTable equal to counting the whole stream at once
    """
    if workers <= 1:
        if scheme.kind == "pattern":
            return pattern_counts(ts, verbose)
        return window_counts(ts, scheme.width, verbose)

    shards = ts.shards(workers)
    logger.debug("counting %s over %d shards", scheme, len(shards))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        tables = list(pool.map(_count_shard, [(shard, scheme) for shard in shards]))
    return reduce(add, tables, PairCountTable(scheme))
