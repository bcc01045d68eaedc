"""Run the scheme x model grid on a synthetic corpus with known bracketings."""

import logging
import os
import sys

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(REPO, "src"))

from nlp.corpus.PairCountTable import parse_scheme
from nlp.pipeline.BracketingPipeline import TUNINGS, BracketingPipeline, RunConfig
from nlp.synthetic.CorpusGenerator import CorpusGenerator


def main():
    """Generate a corpus, then sweep it."""
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    out_dir = os.path.join(REPO, "data", "synthetic")

    corpus = CorpusGenerator(n_categories=8, words_per_category=4, seed=0).generate(n_tokens=50000, n_test=300)
    paths = corpus.write(out_dir)

    cfg = RunConfig(
        corpus_paths=[str(paths["corpus"])],
        thesaurus_path=str(paths["thesaurus"]),
        lexicon_path=str(paths["lexicon"]),
        annotation_path=str(paths["annotations"]),
        output_dir=os.path.join(out_dir, "sweep"),
    ).validate(need_annotations=True)

    print("=" * 60)
    print("Synthetic sweep")
    print("=" * 60)

    pipeline = BracketingPipeline(cfg, verbose=True)
    schemes = [parse_scheme(s) for s in ("pattern", "window:2", "window:3", "window:10")]
    result = pipeline.sweep(schemes, tunings=TUNINGS)
    print(result.table.to_string())

    print("=" * 60)
    print(f"Artifacts written to {cfg.output_dir}")
    print("=" * 60)


if __name__ == "__main__":
    main()
