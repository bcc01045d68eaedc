"""Text normalisation utilities shared by the corpus and lexicon readers."""

import string
import unicodedata
from typing import Iterator, List, Tuple


class TextCleaner:
    """Handles word normalisation and token edge cleanup."""

    # Characters stripped from token edges; anything else is part of the word
    EDGE_PUNCTUATION = string.punctuation + '‘’“”–—'

    COMMENT_PREFIX = '#'

    @staticmethod
    def normalize(word: str, lowercase: bool = True, ascii_fold: bool = False) -> str:
        """Normalise a word for exact-match lookup.

        Args:
            word: Raw word
            lowercase: Whether to lower-case the word
            ascii_fold: Whether to strip accents

        Returns:
            Normalised word
        """
        if ascii_fold:
            word = unicodedata.normalize('NFKD', word)
            word = ''.join(c for c in word if not unicodedata.combining(c))
        return word.lower() if lowercase else word

    @classmethod
    def split_edges(cls, token: str) -> Tuple[str, str, str]:
        """Split a raw token into leading punctuation, core and trailing punctuation.

        Args:
            token: Whitespace-delimited token

        Returns:
            (leading, core, trailing); core is empty for pure punctuation
        """
        core = token.strip(cls.EDGE_PUNCTUATION)
        if not core:
            return token, '', ''
        start = token.index(core)
        return token[:start], core, token[start + len(core):]

    @classmethod
    def punctuation_marks(cls, chunk: str, marks: List[str]) -> List[str]:
        """Pick out the configured marks occurring in a punctuation chunk, in order.

        Multi-character marks such as "--" are matched before single characters.

        Args:
            chunk: Leading or trailing punctuation of a token
            marks: Configured punctuation marks

        Returns:
            Marks found in the chunk
        """
        ordered = sorted(marks, key=len, reverse=True)
        found = []
        i = 0
        while i < len(chunk):
            for mark in ordered:
                if chunk.startswith(mark, i):
                    found.append(mark)
                    i += len(mark)
                    break
            else:
                i += 1
        return found

    @classmethod
    def content_lines(cls, source) -> Iterator[Tuple[int, str]]:
        """Iterate over the non-blank, non-comment lines of a text stream.

        Args:
            source: Iterable of lines (open file, StringIO, list)

        Yields:
            (1-based line number, stripped line)
        """
        for number, line in enumerate(source, start=1):
            line = line.strip()
            if not line or line.startswith(cls.COMMENT_PREFIX):
                continue
            yield number, line
