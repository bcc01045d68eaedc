"""The set of words that can only be used as nouns."""

from typing import FrozenSet, Iterable, Iterator, TextIO

from nlp.preprocessing.TextCleaner import TextCleaner


class NounLexicon:
    """Membership test for the noun-only word set used to flag plain-text tokens."""

    def __init__(self, nouns: Iterable[str] = ()):
        self._nouns: FrozenSet[str] = frozenset(nouns)

    @property
    def nouns(self) -> FrozenSet[str]:
        return self._nouns

    def __contains__(self, word: str) -> bool:
        return word in self._nouns

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._nouns))

    def __len__(self) -> int:
        return len(self._nouns)

    def __eq__(self, other) -> bool:
        return isinstance(other, NounLexicon) and self._nouns == other._nouns

    def __repr__(self) -> str:
        return f"NounLexicon({len(self._nouns)} nouns)"


def load_lexicon(source: TextIO, lowercase: bool = True, ascii_fold: bool = False) -> NounLexicon:
    """Read one noun per line; ``#`` comments and blank lines are skipped.

    Args:
        source: Text stream
        lowercase: Lower-case words on ingestion
        ascii_fold: Strip accents on ingestion

    Returns:
        NounLexicon with duplicates collapsed
    """
    return NounLexicon(
        TextCleaner.normalize(line.split()[0], lowercase, ascii_fold)
        for _, line in TextCleaner.content_lines(source)
    )
