"""Gold bracketing annotations of test compounds."""

from enum import Enum
from typing import Dict, Optional, TextIO

import pandas as pd

from core.utilities.Errors import ParseError
from nlp.corpus.CompoundExtractor import CompoundTriple
from nlp.preprocessing.TextCleaner import TextCleaner


class GoldLabel(Enum):
    LEFT = "L"
    RIGHT = "R"
    ERROR = "E"             # not a noun compound
    INDETERMINATE = "I"     # bracketings indistinguishable in context

    @property
    def scored(self) -> bool:
        """Only left- and right-branching items take part in accuracy."""
        return self in (GoldLabel.LEFT, GoldLabel.RIGHT)


LABEL_NAMES = {
    GoldLabel.ERROR: "Error",
    GoldLabel.INDETERMINATE: "Indeterminate",
    GoldLabel.LEFT: "Left-branching",
    GoldLabel.RIGHT: "Right-branching",
}


def load_annotations(source: TextIO, name: Optional[str] = None, lowercase: bool = True,
                     ascii_fold: bool = False) -> Dict[CompoundTriple, GoldLabel]:
    """Read ``n1 n2 n3<TAB>label`` lines, label one of L, R, E, I; words are normalised like corpus words.

    Returns:
        Mapping in file order; a repeated triple with the same label is accepted once

    Raises:
        ParseError: Malformed line, unknown label or conflicting labels
    """
    name = name or getattr(source, "name", None)
    gold: Dict[CompoundTriple, GoldLabel] = {}
    for number, line in TextCleaner.content_lines(source):
        words, sep, label = line.partition("\t")
        words = words.split()
        if not sep or len(words) != 3:
            raise ParseError("expected 'n1 n2 n3<TAB>label'", name, number)
        try:
            value = GoldLabel(label.strip().upper())
        except ValueError:
            raise ParseError(f"unknown label {label.strip()!r}, expected L, R, E or I", name, number) from None
        triple = CompoundTriple(*(TextCleaner.normalize(w, lowercase, ascii_fold) for w in words))
        if gold.get(triple, value) != value:
            raise ParseError(f"conflicting labels for {triple}", name, number)
        gold[triple] = value
    return gold


def save_annotations(gold: Dict[CompoundTriple, GoldLabel], sink: TextIO) -> None:
    for triple, label in gold.items():
        sink.write(f"{triple}\t{label.value}\n")


def label_distribution(gold: Dict[CompoundTriple, GoldLabel]) -> pd.DataFrame:
    """Count and proportion of each label type, in the order E, I, L, R."""
    counts = pd.Series([label for label in gold.values()], dtype=object).value_counts()
    total = len(gold)
    rows = []
    for label in (GoldLabel.ERROR, GoldLabel.INDETERMINATE, GoldLabel.LEFT, GoldLabel.RIGHT):
        number = int(counts.get(label, 0))
        rows.append({
            "Type": LABEL_NAMES[label],
            "Number": number,
            "Proportion": number / total if total else 0.0,
        })
    return pd.DataFrame(rows, columns=["Type", "Number", "Proportion"])
