"""Unit tests for Settings."""

import os
import shutil
import tempfile
import unittest
from unittest import mock

from core.utilities.Errors import ConfigError
from core.utilities.Settings import ENV_VARIABLE, REPO_ROOT, Settings


class TestSettings(unittest.TestCase):
	"""Test cases for Settings class."""

	@classmethod
	def setUpClass(cls):
		cls.temp_dir = tempfile.mkdtemp()
		cls.ini_path = os.path.join(cls.temp_dir, 'custom.ini')
		with open(cls.ini_path, 'w', encoding='utf-8') as f:
			f.write('[Folders]\nData=$(BRACKET_DIR)/data\nOther=$(BRACKET_TEST_UNSET_VAR)/x\n')
			f.write('[Analyzer]\nfallback_k=37.5\nbroken=abc\n')
			f.write('[Sweep]\nschemes=pattern, window:3\n')
			f.write('[Tokenizer]\nascii_fold=yes\nlowercase=maybe\n')

	@classmethod
	def tearDownClass(cls):
		shutil.rmtree(cls.temp_dir, ignore_errors=True)

	def test_defaults(self):
		"""Test built-in values when the file omits a key."""
		settings = Settings(self.ini_path)
		self.assertEqual(settings.get_float('Analyzer', 'tuned_left_factor'), 2.0)
		self.assertEqual(settings.get('Model', 'normalizer'), 'normalized')
		self.assertEqual(settings.get_list('Tokenizer', 'noun_tags'), ['NN', 'NNS', 'NNP', 'NNPS'])

	def test_file_overrides_defaults(self):
		"""Test values read from the file replace defaults."""
		settings = Settings(self.ini_path)
		self.assertEqual(settings.get_float('Analyzer', 'fallback_k'), 37.5)
		self.assertEqual(settings.get_list('Sweep', 'schemes'), ['pattern', 'window:3'])

	def test_placeholder_expansion(self):
		"""Test $(NAME) expansion; BRACKET_DIR falls back to the repository root."""
		with mock.patch.dict(os.environ, {}, clear=False):
			os.environ.pop('BRACKET_DIR', None)
			settings = Settings(self.ini_path)
			self.assertEqual(settings.get('Folders', 'Data'), f'{REPO_ROOT}/data')
			# unknown variables are left as written
			self.assertEqual(settings.get('Folders', 'Other'), '$(BRACKET_TEST_UNSET_VAR)/x')

	def test_missing_key(self):
		"""Test the caller's default for an absent key."""
		settings = Settings(self.ini_path)
		self.assertEqual(settings.get('Folders', 'Nothing', 'fallback'), 'fallback')
		self.assertEqual(settings.get_list('Nowhere', 'nothing'), [])

	def test_bad_number(self):
		"""Test a non-numeric value raises ConfigError."""
		settings = Settings(self.ini_path)
		with self.assertRaises(ConfigError):
			settings.get_float('Analyzer', 'broken')

	def test_missing_file(self):
		"""Test an explicit path that does not exist raises ConfigError."""
		with self.assertRaises(ConfigError):
			Settings(os.path.join(self.temp_dir, 'absent.ini'))

	def test_environment_path(self):
		"""Test the settings path taken from the environment."""
		with mock.patch.dict(os.environ, {ENV_VARIABLE: self.ini_path}):
			self.assertEqual(Settings().get_float('Analyzer', 'fallback_k'), 37.5)

	def test_booleans(self):
		"""Test boolean values, their defaults and a malformed one."""
		settings = Settings(self.ini_path)
		self.assertTrue(settings.get_bool('Tokenizer', 'ascii_fold'))
		self.assertFalse(Settings(os.path.join(REPO_ROOT, 'config', 'bracket.ini')).get_bool('Tokenizer', 'ascii_fold'))
		self.assertTrue(settings.get_bool('Nowhere', 'nothing', True))
		with self.assertRaises(ConfigError):
			settings.get_bool('Tokenizer', 'lowercase')


if __name__ == '__main__':
	unittest.main()
