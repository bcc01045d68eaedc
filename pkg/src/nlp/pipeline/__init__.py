"""End-to-end bracketing pipelines."""

from nlp.pipeline.BracketingPipeline import (TUNED, TUNINGS, UNTUNED, BracketingPipeline, RunConfig,
                                             SweepCell, SweepResult)

__all__ = ['BracketingPipeline', 'RunConfig', 'SweepCell', 'SweepResult', 'TUNED', 'UNTUNED', 'TUNINGS']
