"""Command-line interface."""

from nlp.cli.CommandLine import build_parser, main

__all__ = ['build_parser', 'main']
