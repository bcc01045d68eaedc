"""Roget-style thesaurus: categories of words with an inverse word index."""

import logging
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Set, TextIO

from core.utilities.Errors import ParseError, UnknownCategoryError
from nlp.preprocessing.TextCleaner import TextCleaner

logger = logging.getLogger(__name__)


class Thesaurus:
    """Maps category ids to word sets and words back to their categories.

    Immutable once constructed; ``load_thesaurus`` reads one from a file.
    """

    def __init__(self, categories: Mapping[str, Iterable[str]]):
        """Build the thesaurus and its inverse index.

        Args:
            categories: Mapping of category id to the words it lists

        Raises:
            ValueError: If a category id is empty or a category has no words
        """
        self._categories: Dict[str, FrozenSet[str]] = {}
        index: Dict[str, Set[str]] = {}

        for category, words in categories.items():
            if not category:
                raise ValueError("category id must be non-empty")
            members = frozenset(words)
            if not members:
                raise ValueError(f"category {category!r} is empty")
            self._categories[category] = members
            for word in members:
                index.setdefault(word, set()).add(category)

        self._word_index: Dict[str, FrozenSet[str]] = {
            word: frozenset(cats) for word, cats in index.items()
        }

    @classmethod
    def singletons(cls, words: Iterable[str]) -> "Thesaurus":
        """Thesaurus in which every word is its own category, named by the word."""
        return cls({word: (word,) for word in words})

    @property
    def categories(self) -> Mapping[str, FrozenSet[str]]:
        return self._categories

    @property
    def word_index(self) -> Mapping[str, FrozenSet[str]]:
        return self._word_index

    def cats(self, word: str) -> FrozenSet[str]:
        """Categories listing ``word``; empty for unknown words."""
        return self._word_index.get(word, frozenset())

    def ambig(self, word: str) -> int:
        """Number of categories in which ``word`` appears."""
        return len(self.cats(word))

    def category_size(self, category: str) -> int:
        """Number of words listed in ``category``.

        Raises:
            UnknownCategoryError: If the category is not defined
        """
        try:
            return len(self._categories[category])
        except KeyError:
            raise UnknownCategoryError(category) from None

    def words(self) -> Iterator[str]:
        """All indexed words."""
        return iter(self._word_index)

    def restrict_to(self, vocabulary) -> "Thesaurus":
        """Intersect every category with ``vocabulary``, dropping emptied categories."""
        restricted = {}
        for category, members in self._categories.items():
            kept = [w for w in members if w in vocabulary]
            if kept:
                restricted[category] = kept
        return Thesaurus(restricted)

    def __contains__(self, word: str) -> bool:
        return word in self._word_index

    def __len__(self) -> int:
        return len(self._categories)

    def __eq__(self, other) -> bool:
        return isinstance(other, Thesaurus) and self._categories == other._categories

    def __repr__(self) -> str:
        return f"Thesaurus({len(self._categories)} categories, {len(self._word_index)} words)"


def load_thesaurus(source: TextIO, name: Optional[str] = None,
                   lowercase: bool = True, ascii_fold: bool = False) -> Thesaurus:
    """Read a thesaurus from ``category_id<TAB>word [word ...]`` lines.

    Lines repeating a category id are merged. Multi-word entries (joined
    with ``_``) are dropped with a warning.

    Args:
        source: Text stream
        name: Source name used in error messages
        lowercase: Lower-case words on ingestion
        ascii_fold: Strip accents on ingestion

    Returns:
        Loaded Thesaurus

    Raises:
        ParseError: On a malformed line or a category left without words
    """
    name = name or getattr(source, "name", None)
    categories: Dict[str, Set[str]] = {}
    first_line: Dict[str, int] = {}
    dropped = 0

    for number, line in TextCleaner.content_lines(source):
        category, sep, rest = line.partition("\t")
        category = category.strip()
        if not sep or not category:
            raise ParseError("expected 'category_id<TAB>words'", name, number)

        members = categories.setdefault(category, set())
        first_line.setdefault(category, number)
        for word in rest.split():
            if "_" in word:
                dropped += 1
                logger.debug("dropping multi-word entry %r in %s", word, category)
                continue
            members.add(TextCleaner.normalize(word, lowercase, ascii_fold))

    for category, members in categories.items():
        if not members:
            raise ParseError(f"category {category!r} has no words", name, first_line[category])

    if dropped:
        logger.warning("%s: dropped %d multi-word thesaurus entries", name or "<stream>", dropped)

    return Thesaurus(categories)


def dump_thesaurus(th: Thesaurus, sink: TextIO) -> None:
    """Write ``th`` in the format read by ``load_thesaurus``, sorted for stable output."""
    for category in sorted(th.categories):
        sink.write(f"{category}\t{' '.join(sorted(th.categories[category]))}\n")
