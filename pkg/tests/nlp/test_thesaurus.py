"""Unit tests for Thesaurus and NounLexicon."""

import io
import os
import unittest

from core.utilities.Errors import ParseError, UnknownCategoryError
from nlp.lexicon.NounLexicon import NounLexicon, load_lexicon
from nlp.lexicon.Thesaurus import Thesaurus, dump_thesaurus, load_thesaurus

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
                        'data', 'fixtures')


class TestThesaurus(unittest.TestCase):
    """Test cases for Thesaurus class."""

    def setUp(self):
        """Load the fixture thesaurus."""
        with open(os.path.join(FIXTURES, 'thesaurus.tsv'), encoding='utf-8') as f:
            self.th = load_thesaurus(f)

    def test_categories(self):
        """Test categories and inverse index."""
        self.assertEqual(len(self.th), 5)
        self.assertEqual(self.th.cats('market'), frozenset({'place', 'trade'}))
        self.assertEqual(self.th.ambig('market'), 2)
        self.assertEqual(self.th.ambig('cheese'), 1)
        self.assertEqual(self.th.ambig('table'), 0)
        self.assertEqual(self.th.cats('table'), frozenset())

    def test_multi_word_entries_dropped(self):
        """Test underscore-joined entries are not indexed."""
        self.assertNotIn('olive_oil', self.th)
        self.assertEqual(self.th.category_size('food'), 4)

    def test_category_size(self):
        """Test sizes and the error for an unknown category."""
        self.assertEqual(self.th.category_size('tool'), 3)
        with self.assertRaises(UnknownCategoryError):
            self.th.category_size('weather')

    def test_index_consistency(self):
        """Test w in category t exactly when t is among cats(w)."""
        for category, members in self.th.categories.items():
            for word in members:
                self.assertIn(category, self.th.cats(word))
        for word in self.th.words():
            for category in self.th.cats(word):
                self.assertIn(word, self.th.categories[category])

    def test_merge_repeated_ids(self):
        """Test lines sharing an id are merged and words lower-cased."""
        th = load_thesaurus(io.StringIO("food\tCheese\nfood\tbread cheese\n"))
        self.assertEqual(th.categories['food'], frozenset({'cheese', 'bread'}))

    def test_malformed_line(self):
        """Test a line without a tab raises ParseError naming the line."""
        with self.assertRaises(ParseError) as context:
            load_thesaurus(io.StringIO("# comment\nfood cheese\n"), name='bad.tsv')
        self.assertEqual(context.exception.line, 2)
        self.assertIn('bad.tsv:2', context.exception.message)

    def test_empty_category(self):
        """Test a category left empty raises ParseError."""
        with self.assertRaises(ParseError):
            load_thesaurus(io.StringIO("food\tolive_oil\n"))

    def test_dump_load(self):
        """Test dumping and reloading gives an equal thesaurus."""
        sink = io.StringIO()
        dump_thesaurus(self.th, sink)
        self.assertTrue(sink.getvalue().startswith("food\tbread butter cheese soup\n"))
        self.assertEqual(load_thesaurus(io.StringIO(sink.getvalue())), self.th)

    def test_singletons(self):
        """Test every word becomes its own category."""
        th = Thesaurus.singletons(['cheese', 'bread'])
        self.assertEqual(th.cats('cheese'), frozenset({'cheese'}))
        self.assertEqual(th.category_size('bread'), 1)

    def test_restrict_to(self):
        """Test categories are intersected with a vocabulary and emptied ones dropped."""
        th = self.th.restrict_to({'market', 'price', 'cheese'})
        self.assertEqual(set(th.categories), {'food', 'place', 'trade'})
        self.assertEqual(th.category_size('trade'), 2)

    def test_invalid_construction(self):
        """Test empty ids and empty categories are rejected."""
        with self.assertRaises(ValueError):
            Thesaurus({'': ['cheese']})
        with self.assertRaises(ValueError):
            Thesaurus({'food': []})


class TestNounLexicon(unittest.TestCase):
    """Test cases for NounLexicon class."""

    def test_load(self):
        """Test loading the fixture lexicon."""
        with open(os.path.join(FIXTURES, 'nouns.txt'), encoding='utf-8') as f:
            lexicon = load_lexicon(f)
        self.assertIn('cheese', lexicon)
        self.assertIn('table', lexicon)
        self.assertNotIn('the', lexicon)
        self.assertEqual(len(lexicon), 17)

    def test_normalised_duplicates(self):
        """Test duplicates collapse after normalisation."""
        lexicon = load_lexicon(io.StringIO("Cheese\ncheese\n# note\n\nbread\n"))
        self.assertEqual(list(lexicon), ['bread', 'cheese'])
        self.assertEqual(lexicon, NounLexicon(['cheese', 'bread']))


if __name__ == '__main__':
    unittest.main()
