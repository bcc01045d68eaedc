"""Asymmetric (modifier, head) co-occurrence counts and their TSV form."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, TextIO, Tuple

from core.utilities.Errors import ParseError

Pair = Tuple[str, str]


@dataclass(frozen=True)
class Scheme:
    """Training scheme: the four-token pattern, or a window of width n >= 2."""
    kind: str
    width: Optional[int] = None

    def __post_init__(self):
        if self.kind == "pattern":
            if self.width is not None:
                raise ValueError("the pattern scheme takes no width")
        elif self.kind == "window":
            if self.width is None or self.width < 2:
                raise ValueError(f"window width must be >= 2, got {self.width}")
        else:
            raise ValueError(f"unknown scheme kind: {self.kind!r}")

    def __str__(self) -> str:
        return "pattern" if self.kind == "pattern" else f"window:{self.width}"


PATTERN = Scheme("pattern")


def parse_scheme(text: str) -> Scheme:
    """Parse ``pattern`` or ``window:N``.

    Raises:
        ValueError: On any other spelling or a width below 2
    """
    text = text.strip()
    if text == "pattern":
        return PATTERN
    kind, sep, width = text.partition(":")
    if kind == "window" and sep and width.isdigit():
        return Scheme("window", int(width))
    raise ValueError(f"scheme must be 'pattern' or 'window:N', got {text!r}")


@dataclass
class PairCountTable:
    """Counts of ordered word pairs gathered under one scheme; absent pairs count 0."""
    scheme: Scheme
    counts: Counter = field(default_factory=Counter)

    def __getitem__(self, pair: Pair) -> int:
        return self.counts.get(pair, 0)

    def add(self, modifier: str, head: str, amount: int = 1) -> None:
        self.counts[(modifier, head)] += amount

    def items(self) -> Iterator[Tuple[Pair, int]]:
        return iter(self.counts.items())

    def total(self) -> int:
        return sum(self.counts.values())

    def words(self) -> set:
        """Every word occurring in a counted pair."""
        found = set()
        for modifier, head in self.counts:
            found.add(modifier)
            found.add(head)
        return found

    def restrict_to(self, vocabulary) -> "PairCountTable":
        """Keep only pairs with both words in ``vocabulary``."""
        kept = Counter({pair: c for pair, c in self.counts.items()
                        if pair[0] in vocabulary and pair[1] in vocabulary})
        return PairCountTable(self.scheme, kept)

    def __add__(self, other: "PairCountTable") -> "PairCountTable":
        if self.scheme != other.scheme:
            raise ValueError(f"cannot merge {self.scheme} counts with {other.scheme} counts")
        merged = Counter(self.counts)
        merged.update(other.counts)
        return PairCountTable(self.scheme, merged)

    def __len__(self) -> int:
        return sum(1 for c in self.counts.values() if c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairCountTable):
            return NotImplemented
        return self.scheme == other.scheme and +self.counts == +other.counts

    def as_dict(self) -> Dict[Pair, int]:
        return {pair: c for pair, c in self.counts.items() if c}


HEADER_PREFIX = "#scheme="


def save_counts(table: PairCountTable, sink: TextIO) -> None:
    """Write ``#scheme=...`` then ``modifier<TAB>head<TAB>count`` lines sorted by pair."""
    sink.write(f"{HEADER_PREFIX}{table.scheme}\n")
    for (modifier, head), count in sorted(table.as_dict().items()):
        sink.write(f"{modifier}\t{head}\t{count}\n")


def load_counts(source: TextIO, name: Optional[str] = None) -> PairCountTable:
    """Read a count table written by ``save_counts``.

    Raises:
        ParseError: Missing or bad header, malformed line or negative count
    """
    name = name or getattr(source, "name", None)
    table = None
    for number, line in enumerate(source, start=1):
        line = line.rstrip("\n")
        if table is None:
            if not line.startswith(HEADER_PREFIX):
                raise ParseError(f"expected '{HEADER_PREFIX}<pattern|window:n>' header", name, number)
            try:
                table = PairCountTable(parse_scheme(line[len(HEADER_PREFIX):]))
            except ValueError as e:
                raise ParseError(str(e), name, number) from None
            continue
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3 or not fields[0] or not fields[1]:
            raise ParseError("expected 'modifier<TAB>head<TAB>count'", name, number)
        try:
            count = int(fields[2])
        except ValueError:
            raise ParseError(f"count is not an integer: {fields[2]!r}", name, number) from None
        if count < 0:
            raise ParseError(f"negative count {count}", name, number)
        table.add(fields[0], fields[1], count)

    if table is None:
        raise ParseError("empty count file", name, 1)
    return table
