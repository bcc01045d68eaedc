#!/usr/bin/python
# Filename: Settings.py
# Description: Typed access to the master settings file (config/bracket.ini)

from core.utilities.Errors import ConfigError

import configparser
import os
import re
from pathlib import Path

REPO_ROOT		= Path(__file__).resolve().parents[3]
DEFAULT_PATH	= REPO_ROOT / 'config' / 'bracket.ini'
ENV_VARIABLE	= 'BRACKET_CONFIG'

# Values used when a key is absent from the file
DEFAULTS = {
	'Tokenizer': {
		'noun_tags':			'NN NNS NNP NNPS',
		'sentence_end':			'. ? !',
		'clause_punctuation':	', ; : ( ) " \' -- [ ] { }',
		'lowercase':			'true',
		'ascii_fold':			'false',
	},
	'Model': {
		'normalizer':			'normalized',
	},
	'Analyzer': {
		'tuned_left_factor':	'2.0',
		'fallback_k':			'1.0',
	},
	'Sweep': {
		'schemes':				'pattern window:2 window:3 window:4 window:5 window:10 window:50 window:100',
		'models':				'adjacency dependency',
		'tunings':				'untuned',
		'parameterisations':	'conceptual',
	},
}

_PLACEHOLDER	= re.compile(r'\$\((\w+)\)')

class Settings:
	def __init__(self, path=None):
		""" Constructor
		Arguments
			path -- Settings file; falls back to $BRACKET_CONFIG, then config/bracket.ini
		"""
		if path is None:
			path	= os.environ.get(ENV_VARIABLE, DEFAULT_PATH)

		self.path	= Path(path)
		self.parser	= configparser.ConfigParser(interpolation=None)
		self.parser.optionxform = str
		self.parser.read_dict(DEFAULTS)

		if self.path.exists():
			try:
				self.parser.read(self.path, encoding='utf-8')
			except configparser.Error as e:
				raise ConfigError(f'{self.path}: {e}')
		elif path != DEFAULT_PATH:
			raise ConfigError(f'settings file not found: {self.path}')
		return

	def get(self, section:str, key:str, default=None):
		""" Returns a value with $(NAME) placeholders expanded
		Arguments
			section -- INI section
			key -- Key within the section
			default -- Value returned when the key is missing
		"""
		value	= self.parser.get(section, key, fallback=None)
		if value is None:
			return default

		return _PLACEHOLDER.sub(self._expand, value.strip())

	def get_float(self, section:str, key:str, default=0.0):
		""" Returns a value as a float
		Arguments
			section -- INI section
			key -- Key within the section
			default -- Value returned when the key is missing
		"""
		value	= self.get(section, key)
		if value is None:
			return default

		try:
			return float(value)
		except ValueError:
			raise ConfigError(f'[{section}] {key}: not a number: {value!r}')

	def get_bool(self, section:str, key:str, default=False):
		""" Returns a value as a boolean (true/false, yes/no, on/off, 1/0)
		Arguments
			section -- INI section
			key -- Key within the section
			default -- Value returned when the key is missing
		"""
		value	= self.get(section, key)
		if value is None:
			return default

		try:
			return self.parser.BOOLEAN_STATES[value.lower()]
		except KeyError:
			raise ConfigError(f'[{section}] {key}: not a boolean: {value!r}')

	def get_list(self, section:str, key:str, default=None, sep=r'[\s,]+'):
		""" Returns a separated value as a list
		Arguments
			section -- INI section
			key -- Key within the section
			default -- Value returned when the key is missing
			sep -- Separator pattern, whitespace or commas by default
		"""
		value	= self.get(section, key)
		if value is None:
			return list(default or [])

		return [item for item in re.split(sep, value) if item]

	@staticmethod
	def _expand(match):
		name	= match.group(1)
		if name == 'BRACKET_DIR':
			return os.environ.get(name, str(REPO_ROOT))

		return os.environ.get(name, match.group(0))
