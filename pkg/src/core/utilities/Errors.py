#!/usr/bin/python
# Filename: Errors.py
# Description: Error codes, exit codes and the exception hierarchy shared by all modules

from enum import Enum, IntEnum

class ErrorCode(Enum):			# Win32 Error codes
	ERROR_FILE_NOT_FOUND	= 2
	ERROR_PATH_NOT_FOUND	= 3
	ERROR_INVALID_PARAMETER	= 87
	ERROR_INVALID_DATA		= 13
	ERROR_NOT_FOUND			= 1168
	ERROR_INVALID_LEVEL		= 124

	E_INVALIDARG      		= 0x80070057
	E_UNEXPECTED      		= 0x8000FFFF
	E_FAIL            		= 0x80000008

	NOERROR             	= 0x00000000
	S_OK					= 0x00000000


class ExitCode(IntEnum):		# Process exit status of the command line
	SUCCESS				= 0
	PARTIAL_FAILURE		= 1
	USAGE_ERROR			= 2


class BracketingError(Exception):
	""" Base class of every error raised by the bracketing toolkit """
	code	= ErrorCode.E_FAIL

	def __init__(self, message:str, code:ErrorCode=None):
		""" Constructor
		Arguments
			message -- Human readable description
			code -- Optional error code overriding the class default
		"""
		Exception.__init__(self, message)
		self.message	= message
		if code is not None:
			self.code	= code
		return


class ParseError(BracketingError):
	""" Malformed input file or stream """
	code	= ErrorCode.ERROR_INVALID_DATA

	def __init__(self, message:str, source:str=None, line:int=None, offset:int=None):
		""" Constructor
		Arguments
			message -- What is wrong with the input
			source -- Name of the file or stream
			line -- 1-based line number, if known
			offset -- Character offset, if known
		"""
		self.source	= source
		self.line	= line
		self.offset	= offset

		where	= source if source is not None else '<stream>'
		if line is not None:
			where	= f'{where}:{line}'
		if offset is not None:
			where	= f'{where} (offset {offset})'

		BracketingError.__init__(self, f'{where}: {message}')
		return


class ConfigError(BracketingError):
	""" Invalid configuration, missing path or incompatible artifacts """
	code	= ErrorCode.ERROR_INVALID_PARAMETER


class UnknownWordError(BracketingError):
	""" A word has no thesaurus category """
	code	= ErrorCode.ERROR_NOT_FOUND

	def __init__(self, word:str):
		self.word	= word
		BracketingError.__init__(self, f'word not in thesaurus: {word!r}')
		return


class UnknownCategoryError(BracketingError):
	""" A category id is not defined by the thesaurus """
	code	= ErrorCode.ERROR_NOT_FOUND

	def __init__(self, category:str):
		self.category	= category
		BracketingError.__init__(self, f'unknown category: {category!r}')
		return


class EvaluationError(BracketingError):
	""" Scoring could not be carried out on the supplied items """
	code	= ErrorCode.E_INVALIDARG
