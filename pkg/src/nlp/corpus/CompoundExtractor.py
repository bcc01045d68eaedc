"""Three-noun test compounds: extraction from a stream and masking out of training data."""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, TextIO, Tuple

from core.utilities.Errors import ParseError
from nlp.corpus.TokenStream import BREAK, TokenStream
from nlp.lexicon.Thesaurus import Thesaurus
from nlp.preprocessing.TextCleaner import TextCleaner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompoundTriple:
    """Three nouns n1 n2 n3; equality and hashing use the words only."""
    n1: str
    n2: str
    n3: str
    offset: Optional[int] = field(default=None, compare=False)

    @property
    def words(self) -> Tuple[str, str, str]:
        return (self.n1, self.n2, self.n3)

    def __str__(self) -> str:
        return " ".join(self.words)


def extract_test_candidates(ts: TokenStream, th: Thesaurus) -> List[CompoundTriple]:
    """Find maximal noun runs of exactly three words, all listed in the thesaurus.

    Runs end at non-noun tokens and at sentence breaks; longer runs are skipped
    because their extent is ambiguous.

    Args:
        ts: Token stream
        th: Thesaurus; every word of a candidate must have ambig >= 1

    Returns:
        One CompoundTriple per qualifying run, in stream order, with the
        stream index of n1 as offset
    """
    triples = []
    start = None
    for i, token in enumerate(list(ts) + [BREAK]):
        if token.is_noun:
            if start is None:
                start = i
            continue
        if start is not None and i - start == 3:
            words = [t.word for t in ts[start:i]]
            if all(w in th for w in words):
                triples.append(CompoundTriple(*words, offset=start))
        start = None
    return triples


def unique_triples(triples: Iterable[CompoundTriple]) -> List[CompoundTriple]:
    """Distinct triples in first-occurrence order."""
    seen = {}
    for triple in triples:
        seen.setdefault(triple, triple)
    return list(seen)


def mask_test_occurrences(ts: TokenStream, triples: Iterable[CompoundTriple]) -> TokenStream:
    """Replace every contiguous occurrence of a test triple by a sentence break.

    Occurrences are matched leftmost first and do not overlap, as a regular
    expression scan would; noun flags play no part in matching.

    Args:
        ts: Training stream
        triples: Test compounds to remove

    Returns:
        New stream; the input is left untouched
    """
    targets = {triple.words for triple in triples}
    tokens = ts.tokens
    masked = TokenStream(mode=ts.mode)
    removed = 0
    i = 0
    while i < len(tokens):
        window = tokens[i:i + 3]
        if len(window) == 3 and BREAK not in window and tuple(t.word for t in window) in targets:
            masked.append(BREAK)
            removed += 1
            i += 3
        else:
            masked.append(tokens[i])
            i += 1
    masked.finish()
    if removed:
        logger.info("masked %d test compound occurrences", removed)
    return masked


def save_triples(triples: Iterable[CompoundTriple], sink: TextIO) -> None:
    """Write one ``n1 n2 n3`` per line."""
    for triple in triples:
        sink.write(f"{triple}\n")


def load_triples(source: TextIO, name: Optional[str] = None, lowercase: bool = True,
                 ascii_fold: bool = False) -> List[CompoundTriple]:
    """Read triples written by ``save_triples``; a trailing TAB field (a label) is ignored.

    Words are normalised as the tokenizer normalises corpus words.

    Raises:
        ParseError: A line does not hold exactly three words
    """
    name = name or getattr(source, "name", None)
    triples = []
    for number, line in TextCleaner.content_lines(source):
        words = line.split("\t")[0].split()
        if len(words) != 3:
            raise ParseError(f"expected three words, got {len(words)}", name, number)
        triples.append(CompoundTriple(*(TextCleaner.normalize(w, lowercase, ascii_fold) for w in words)))
    return triples
