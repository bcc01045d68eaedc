"""
Example usage of the bracketing components on the fixture corpus.
This demonstrates how to use individual modules or the complete pipeline.
"""

import os
import sys

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(REPO, "src"))
FIXTURES = os.path.join(REPO, "data", "fixtures")


def example_tokenizer():
    """Example: Using Tokenizer with a noun lexicon."""
    print("\n" + "="*60)
    print("Example 1: Tokenizing")
    print("="*60)

    from nlp.lexicon.NounLexicon import NounLexicon
    from nlp.preprocessing.Tokenizer import Tokenizer

    tokenizer = Tokenizer(NounLexicon(["village", "market", "cheese"]))
    stream = tokenizer.tokenize("We bought village market cheese today. It was good!")

    for sentence in stream.sentences():
        print("  " + " ".join(f"{t.word}{'*' if t.is_noun else ''}" for t in sentence))


def example_single_compound():
    """Example: Counting, estimating and bracketing by hand."""
    print("\n" + "="*60)
    print("Example 2: One compound, step by step")
    print("="*60)

    from nlp.analysis.CompoundAnalyzer import ADJACENCY, DEPENDENCY, AnalyzerConfig, analyze
    from nlp.corpus.CompoundExtractor import CompoundTriple
    from nlp.corpus.PairCountTable import PATTERN
    from nlp.corpus.PairCounter import count_pairs
    from nlp.lexicon.NounLexicon import load_lexicon
    from nlp.lexicon.Thesaurus import load_thesaurus
    from nlp.model.Estimator import estimate_conceptual
    from nlp.preprocessing.Tokenizer import Tokenizer

    with open(os.path.join(FIXTURES, "thesaurus.tsv"), encoding="utf-8") as f:
        thesaurus = load_thesaurus(f)
    with open(os.path.join(FIXTURES, "nouns.txt"), encoding="utf-8") as f:
        lexicon = load_lexicon(f)
    with open(os.path.join(FIXTURES, "corpus.txt"), encoding="utf-8") as f:
        stream = Tokenizer(lexicon).tokenize(f.read())

    counts = count_pairs(stream, PATTERN)
    print(f"\n{len(counts)} distinct pairs, {counts.total()} instances")
    params = estimate_conceptual(counts, thesaurus)
    for (t1, t2), p in sorted(params.params.items()):
        print(f"  Pr({t1} -> {t2}) = {p:.3f}")

    triple = CompoundTriple("farmer", "cheese", "bread")
    for model in (ADJACENCY, DEPENDENCY):
        d = analyze(triple, params, thesaurus, AnalyzerConfig(model=model))
        print(f"\n{model}: {triple} -> {d.branching}"
              f" (ratio {d.ratio.numerator:.3f}/{d.ratio.denominator:.3f}, guess={d.guess_reason})")


def example_full_pipeline():
    """Example: Train and score with BracketingPipeline."""
    print("\n" + "="*60)
    print("Example 3: Complete Pipeline")
    print("="*60)

    from nlp.evaluation.Evaluator import score
    from nlp.pipeline.BracketingPipeline import BracketingPipeline, RunConfig

    cfg = RunConfig(
        corpus_paths=[os.path.join(FIXTURES, "corpus.txt")],
        thesaurus_path=os.path.join(FIXTURES, "thesaurus.tsv"),
        lexicon_path=os.path.join(FIXTURES, "nouns.txt"),
        annotation_path=os.path.join(FIXTURES, "annotations.tsv"),
    ).validate(need_annotations=True)
    pipeline = BracketingPipeline(cfg)

    _, params = pipeline.train()
    gold = pipeline.load_gold()
    decisions = pipeline.analyze(list(gold), params)

    print(score(decisions, gold).to_text())


def main():
    """Run all examples."""
    print("\n" + "="*60)
    print("Bracketing Usage Examples")
    print("="*60)

    example_tokenizer()
    example_single_compound()
    example_full_pipeline()

    print("\n" + "="*60)
    print("All examples completed!")
    print("="*60)


if __name__ == "__main__":
    main()
