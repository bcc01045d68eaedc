"""Plain and POS-tagged corpus tokenisation into noun-flagged token streams."""

import re
from typing import Iterable, List, Optional

from nltk.tag import str2tuple

from core.utilities.Errors import ParseError
from nlp.corpus.TokenStream import BREAK, PLAIN, TAGGED, Token, TokenStream
from nlp.lexicon.NounLexicon import NounLexicon
from nlp.preprocessing.TextCleaner import TextCleaner


DEFAULT_NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})
DEFAULT_SENTENCE_END = (".", "?", "!")
DEFAULT_CLAUSE_PUNCTUATION = (",", ";", ":", "(", ")", '"', "'", "--", "[", "]", "{", "}")

# A blank line, or a whitespace-delimited token
_TOKEN_OR_BLANK = re.compile(r"\n[^\S\n]*\n|\S+")


class Tokenizer:
    """Turns corpus text into a TokenStream.

    In plain mode a token is a noun iff its normalised form is in the noun
    lexicon; in tagged mode iff its tag is one of ``noun_tags``. Sentence
    enders and blank lines become breaks, and clause punctuation becomes a
    separate non-noun token.
    """

    def __init__(self, lexicon: Optional[NounLexicon] = None,
                 noun_tags: Iterable[str] = DEFAULT_NOUN_TAGS,
                 sentence_end: Iterable[str] = DEFAULT_SENTENCE_END,
                 clause_punctuation: Iterable[str] = DEFAULT_CLAUSE_PUNCTUATION,
                 lowercase: bool = True,
                 ascii_fold: bool = False):
        """Initialise the tokenizer.

        Args:
            lexicon: Noun-only word set, required for plain mode
            noun_tags: Tags counted as nouns in tagged mode
            sentence_end: Marks that end a sentence
            clause_punctuation: Marks kept as separate non-noun tokens
            lowercase: Lower-case words
            ascii_fold: Strip accents
        """
        self.lexicon = lexicon if lexicon is not None else NounLexicon()
        self.noun_tags = frozenset(tag.upper() for tag in noun_tags)
        self.sentence_end = tuple(sentence_end)
        self.clause_punctuation = tuple(clause_punctuation)
        self.lowercase = lowercase
        self.ascii_fold = ascii_fold

    def tokenize(self, text: str, mode: str = PLAIN, source: Optional[str] = None) -> TokenStream:
        """Tokenise a corpus text.

        Args:
            text: Corpus text
            mode: ``plain`` or ``tagged``
            source: Name used in error messages

        Returns:
            Normalised TokenStream

        Raises:
            ParseError: A tagged-mode token has no ``/TAG`` suffix
        """
        if mode not in (PLAIN, TAGGED):
            raise ValueError(f"unknown tokenizer mode: {mode!r}")

        stream = TokenStream(mode=mode)
        for match in _TOKEN_OR_BLANK.finditer(text):
            raw = match.group(0)
            if raw.isspace():
                stream.append(BREAK)
                continue

            tag = None
            if mode == TAGGED:
                raw, tag = str2tuple(raw)
                if tag is None or not raw or not tag:
                    raise ParseError(f"token {match.group(0)!r} is not word/TAG", source,
                                     offset=match.start())

            for token in self._split(raw, tag, mode == TAGGED):
                stream.append(token)

        stream.finish()
        return stream

    def _split(self, raw: str, tag: Optional[str], tagged: bool) -> List[Token]:
        marks = self.sentence_end + self.clause_punctuation
        leading, core, trailing = TextCleaner.split_edges(raw)
        if not core:
            # the whole token is punctuation
            return self._punctuation(TextCleaner.punctuation_marks(leading, marks), tagged, tag)

        tokens = self._punctuation(TextCleaner.punctuation_marks(leading, marks), tagged)
        word = TextCleaner.normalize(core, self.lowercase, self.ascii_fold)
        if not tagged:
            tokens.append(Token(word, word in self.lexicon))
        else:
            tokens.append(Token(word, tag in self.noun_tags, tag))
        tokens.extend(self._punctuation(TextCleaner.punctuation_marks(trailing, marks), tagged))
        return tokens

    def _punctuation(self, found: List[str], tagged: bool, tag: Optional[str] = None) -> List[Token]:
        tokens = []
        for mark in found:
            if mark in self.sentence_end:
                tokens.append(BREAK)
            else:
                tokens.append(Token(mark, False, (tag or mark) if tagged else None))
        return tokens


def tokenize(text: str, mode: str = PLAIN, lexicon: Optional[NounLexicon] = None,
             noun_tags: Iterable[str] = DEFAULT_NOUN_TAGS) -> TokenStream:
    """Tokenise ``text`` with default punctuation settings."""
    return Tokenizer(lexicon, noun_tags).tokenize(text, mode)
