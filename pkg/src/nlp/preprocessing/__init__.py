"""Text preprocessing utilities."""

from nlp.preprocessing.TextCleaner import TextCleaner
from nlp.preprocessing.Tokenizer import Tokenizer, tokenize

__all__ = ['TextCleaner', 'Tokenizer', 'tokenize']
