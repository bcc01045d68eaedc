"""Sparse table of modification probabilities Pr(t1 -> t2)."""

import math
from dataclasses import dataclass, field
from typing import Dict, Optional, TextIO, Tuple

from core.utilities.Errors import ParseError

CONCEPTUAL = "conceptual"
LEXICAL = "lexical"
PARAMETERISATIONS = (CONCEPTUAL, LEXICAL)

HEADER_PREFIX = "#parameterisation="
ETA_PREFIX = "#eta\t"


@dataclass
class ParameterTable:
    """Pr(modifier category -> head category), stored sparsely.

    Absent pairs have probability 0. ``head_norms`` keeps the normaliser of
    every head category with nonzero evidence.
    """
    params: Dict[Tuple[str, str], float] = field(default_factory=dict)
    head_norms: Dict[str, float] = field(default_factory=dict)
    parameterisation: str = CONCEPTUAL

    def __post_init__(self):
        if self.parameterisation not in PARAMETERISATIONS:
            raise ValueError(f"unknown parameterisation: {self.parameterisation!r}")

    def prob(self, modifier: str, head: str) -> float:
        return self.params.get((modifier, head), 0.0)

    def heads(self):
        return self.head_norms.keys()

    def head_total(self, head: str) -> float:
        """Sum of Pr(t1 -> head) over all modifier categories."""
        return math.fsum(p for (_, h), p in self.params.items() if h == head)

    def __len__(self) -> int:
        return len(self.params)


def save_params(pt: ParameterTable, sink: TextIO) -> None:
    """Write the header, the normalisers and ``t1<TAB>t2<TAB>probability`` lines.

    Probabilities use 17 significant digits, so reading them back is exact.
    """
    sink.write(f"{HEADER_PREFIX}{pt.parameterisation}\n")
    for head in sorted(pt.head_norms):
        sink.write(f"{ETA_PREFIX}{head}\t{pt.head_norms[head]:.17g}\n")
    for (modifier, head), p in sorted(pt.params.items()):
        sink.write(f"{modifier}\t{head}\t{p:.17g}\n")


def load_params(source: TextIO, name: Optional[str] = None) -> ParameterTable:
    """Read a parameter file written by ``save_params``; an empty file is an empty table.

    Raises:
        ParseError: Bad header, malformed line or probability outside [0, 1]
    """
    name = name or getattr(source, "name", None)
    pt = None
    for number, line in enumerate(source, start=1):
        line = line.rstrip("\n")
        if pt is None:
            if not line.strip():
                continue
            if not line.startswith(HEADER_PREFIX):
                raise ParseError(f"expected '{HEADER_PREFIX}<conceptual|lexical>' header", name, number)
            try:
                pt = ParameterTable(parameterisation=line[len(HEADER_PREFIX):].strip())
            except ValueError as e:
                raise ParseError(str(e), name, number) from None
            continue

        if line.startswith(ETA_PREFIX):
            fields = line[len(ETA_PREFIX):].split("\t")
            if len(fields) != 2:
                raise ParseError("expected '#eta<TAB>head<TAB>value'", name, number)
            pt.head_norms[fields[0]] = _number(fields[1], name, number)
            continue
        if not line.strip() or line.startswith("#"):
            continue

        fields = line.split("\t")
        if len(fields) != 3 or not fields[0] or not fields[1]:
            raise ParseError("expected 't1<TAB>t2<TAB>probability'", name, number)
        p = _number(fields[2], name, number)
        if not 0.0 <= p <= 1.0:
            raise ParseError(f"probability {p} outside [0, 1]", name, number)
        pt.params[(fields[0], fields[1])] = p

    return pt if pt is not None else ParameterTable()


def _number(text: str, name, number) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"not a number: {text!r}", name, number) from None
    if not math.isfinite(value) or value < 0:
        raise ParseError(f"value must be finite and non-negative: {text!r}", name, number)
    return value
