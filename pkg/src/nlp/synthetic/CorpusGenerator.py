"""Synthetic corpora drawn from a known dependency-model ground truth."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List

import numpy as np

from nlp.corpus.CompoundExtractor import CompoundTriple
from nlp.evaluation.Annotations import GoldLabel, save_annotations
from nlp.lexicon.NounLexicon import NounLexicon
from nlp.lexicon.Thesaurus import Thesaurus, dump_thesaurus

logger = logging.getLogger(__name__)

FILLERS = ("the", "a", "of", "was", "is", "in", "with", "and", "for", "by",
           "from", "its", "their", "were", "on", "at", "this", "that")

# Draws per test item before giving up on finding an unused triple
MAX_ATTEMPTS = 10000


@dataclass
class SyntheticCorpus:
    thesaurus: Thesaurus
    lexicon: NounLexicon
    text: str
    gold: Dict[CompoundTriple, GoldLabel]
    # modifier_given_head[h, m] = Pr(category m -> category h)
    modifier_given_head: np.ndarray

    def write(self, directory) -> Dict[str, Path]:
        """Write thesaurus, lexicon, corpus and annotations into ``directory``."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        paths = {
            "thesaurus": directory / "thesaurus.tsv",
            "lexicon": directory / "nouns.txt",
            "corpus": directory / "corpus.txt",
            "annotations": directory / "annotations.tsv",
        }
        with open(paths["thesaurus"], "w", encoding="utf-8") as f:
            dump_thesaurus(self.thesaurus, f)
        with open(paths["lexicon"], "w", encoding="utf-8") as f:
            f.writelines(f"{noun}\n" for noun in self.lexicon)
        with open(paths["corpus"], "w", encoding="utf-8") as f:
            f.write(self.text)
        with open(paths["annotations"], "w", encoding="utf-8") as f:
            save_annotations(self.gold, f)
        return paths


class CorpusGenerator:
    """Generates two-noun training compounds and three-noun test compounds.

    Head categories are uniform; a modifier category is drawn from a peaked
    per-head distribution. Left-branching test compounds chain n1 -> n2 -> n3,
    right-branching ones attach n1 and n2 both to n3. Each test item is
    left-branching with probability ``left_prior``.
    """

    def __init__(self, n_categories: int = 8, words_per_category: int = 4,
                 concentration: float = 0.1, left_prior: float = 2 / 3, seed: int = 0):
        """Initialise the generator.

        Args:
            n_categories: Number of thesaurus categories
            words_per_category: Nouns per category; every noun is unambiguous
            concentration: Dirichlet parameter of the per-head modifier distributions
            left_prior: Proportion of left-branching test compounds
            seed: Random seed
        """
        self.n_categories = n_categories
        self.words_per_category = words_per_category
        self.concentration = concentration
        self.left_prior = left_prior
        self.rng = np.random.default_rng(seed)

        self.categories = [f"syn-{c:02d}" for c in range(n_categories)]
        self.members = [[f"n{c:02d}w{j}" for j in range(words_per_category)]
                        for c in range(n_categories)]
        self.modifier_given_head = self.rng.dirichlet([concentration] * n_categories,
                                                      size=n_categories)

    def generate(self, n_tokens: int = 50000, n_test: int = 300) -> SyntheticCorpus:
        """Draw a training corpus of at least ``n_tokens`` tokens and ``n_test`` distinct test triples."""
        thesaurus = Thesaurus(dict(zip(self.categories, self.members)))
        lexicon = NounLexicon(w for words in self.members for w in words)
        text = self._training_text(n_tokens)
        gold = self._test_set(n_test)
        logger.info("generated %d training tokens and %d test triples", n_tokens, len(gold))
        return SyntheticCorpus(thesaurus, lexicon, text, gold, self.modifier_given_head)

    def _word(self, category: int) -> str:
        return self.members[category][self.rng.integers(self.words_per_category)]

    def _modifier(self, head: int) -> int:
        return int(self.rng.choice(self.n_categories, p=self.modifier_given_head[head]))

    def _fillers(self, low: int, high: int) -> List[str]:
        return [FILLERS[i] for i in self.rng.integers(len(FILLERS), size=self.rng.integers(low, high + 1))]

    def _training_text(self, n_tokens: int) -> str:
        sentences = []
        total = 0
        while total < n_tokens:
            head = int(self.rng.integers(self.n_categories))
            modifier = self._modifier(head)
            words = self._fillers(1, 3) + [self._word(modifier), self._word(head)] + self._fillers(1, 3) + ["."]
            sentences.append(" ".join(words))
            total += len(words)
        return "\n".join(sentences) + "\n"

    def _test_set(self, n_test: int) -> Dict[CompoundTriple, GoldLabel]:
        gold: Dict[CompoundTriple, GoldLabel] = {}
        for _ in range(n_test):
            label = GoldLabel.LEFT if self.rng.random() < self.left_prior else GoldLabel.RIGHT
            for _ in range(MAX_ATTEMPTS):
                t3 = int(self.rng.integers(self.n_categories))
                t2 = self._modifier(t3)
                t1 = self._modifier(t2 if label is GoldLabel.LEFT else t3)
                triple = CompoundTriple(self._word(t1), self._word(t2), self._word(t3))
                if triple not in gold:
                    gold[triple] = label
                    break
            else:
                raise ValueError(f"found only {len(gold)} distinct test triples, {n_test} requested")
        return gold
