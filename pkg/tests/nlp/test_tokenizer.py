"""Unit tests for Tokenizer."""

import unittest

from core.utilities.Errors import ParseError
from nlp.corpus.TokenStream import BREAK, TAGGED, Token
from nlp.lexicon.NounLexicon import NounLexicon
from nlp.preprocessing.Tokenizer import Tokenizer, tokenize


class TestTokenizer(unittest.TestCase):
    """Test cases for Tokenizer class."""

    def setUp(self):
        """Set up a small noun lexicon."""
        self.lexicon = NounLexicon(["cheese", "bread", "butter", "market", "village", "knife"])
        self.tokenizer = Tokenizer(self.lexicon)

    def test_plain_noun_flags(self):
        """Test nouns are flagged by lexicon membership after lower-casing."""
        stream = self.tokenizer.tokenize("The Village cheese")
        self.assertEqual(list(stream), [Token("the", False), Token("village", True), Token("cheese", True)])

    def test_sentence_end_breaks(self):
        """Test sentence enders become single breaks, never leading or trailing."""
        stream = self.tokenizer.tokenize(". cheese. ! bread?")
        self.assertEqual(list(stream), [Token("cheese", True), BREAK, Token("bread", True)])

    def test_blank_line_break(self):
        """Test a blank line separates sentences."""
        stream = self.tokenizer.tokenize("cheese\n\n  bread\nbutter")
        self.assertEqual([t.word for t in stream], ["cheese", "", "bread", "butter"])
        self.assertEqual(len(list(stream.sentences())), 2)

    def test_clause_punctuation(self):
        """Test clause punctuation becomes a separate non-noun token."""
        stream = self.tokenizer.tokenize("bread (butter), cheese -- knife")
        self.assertEqual([(t.word, t.is_noun) for t in stream], [
            ("bread", True), ("(", False), ("butter", True), (")", False), (",", False),
            ("cheese", True), ("--", False), ("knife", True),
        ])

    def test_unlisted_punctuation_dropped(self):
        """Test edge characters outside the configured marks are discarded."""
        stream = self.tokenizer.tokenize("*cheese*")
        self.assertEqual(list(stream), [Token("cheese", True)])

    def test_tagged_mode(self):
        """Test tags decide noun status and are kept on the token."""
        stream = Tokenizer().tokenize("The/DT sets/NNS ,/, cheese/nn ./.", mode=TAGGED)
        self.assertEqual(list(stream), [
            Token("the", False, "DT"), Token("sets", True, "NNS"), Token(",", False, ","),
            Token("cheese", True, "NN"),
        ])
        self.assertEqual(stream.mode, TAGGED)

    def test_custom_noun_tags(self):
        """Test a restricted noun-tag set."""
        stream = Tokenizer(noun_tags=["NN"]).tokenize("cats/NNS cat/NN", mode=TAGGED)
        self.assertEqual([t.is_noun for t in stream], [False, True])

    def test_tagged_missing_tag(self):
        """Test a token without a tag raises ParseError with its offset."""
        with self.assertRaises(ParseError) as context:
            Tokenizer().tokenize("the/DT cheese", mode=TAGGED, source="corpus.txt")
        self.assertEqual(context.exception.offset, 7)
        self.assertIn("corpus.txt", context.exception.message)

    def test_empty_text(self):
        """Test empty input gives an empty stream."""
        self.assertEqual(len(self.tokenizer.tokenize("")), 0)
        self.assertEqual(len(self.tokenizer.tokenize("\n\n . \n")), 0)

    def test_module_function(self):
        """Test the convenience function uses default settings."""
        stream = tokenize("village market.", lexicon=self.lexicon)
        self.assertEqual([t.word for t in stream], ["village", "market"])


if __name__ == '__main__':
    unittest.main()
