"""Token sequences with noun flags and sentence-break markers."""

from typing import Iterable, Iterator, List, NamedTuple, Optional


class Token(NamedTuple):
    """A normalised word and whether it counts as a noun.

    ``tag`` is kept only for tagged corpora so the stream can be written back.
    """
    word: str
    is_noun: bool
    tag: Optional[str] = None


# Sentence boundary; never a noun, never matches a word
BREAK = Token("", False, None)

PLAIN = "plain"
TAGGED = "tagged"


class TokenStream:
    """Ordered tokens with breaks between sentences.

    Streams are normalised: no leading or trailing break and no two breaks in
    a row, so equal token content always means an equal stream.
    """

    def __init__(self, tokens: Iterable[Token] = (), mode: str = PLAIN):
        if mode not in (PLAIN, TAGGED):
            raise ValueError(f"unknown stream mode: {mode!r}")
        self.mode = mode
        self.tokens: List[Token] = []
        for token in tokens:
            self.append(token)
        self.finish()

    def append(self, token: Token) -> None:
        """Append a token; breaks collapse and are never leading."""
        if token == BREAK:
            if self.tokens and self.tokens[-1] != BREAK:
                self.tokens.append(BREAK)
        else:
            self.tokens.append(token)

    def finish(self) -> None:
        """Drop a trailing break left by the last append."""
        while self.tokens and self.tokens[-1] == BREAK:
            self.tokens.pop()

    def sentences(self) -> Iterator[List[Token]]:
        """Yield the runs of tokens between breaks."""
        current: List[Token] = []
        for token in self.tokens:
            if token == BREAK:
                if current:
                    yield current
                current = []
            else:
                current.append(token)
        if current:
            yield current

    def shards(self, count: int) -> List["TokenStream"]:
        """Split into at most ``count`` streams, cutting only at sentence breaks."""
        sentences = list(self.sentences())
        if count <= 1 or len(sentences) <= 1:
            return [self]
        size = -(-len(sentences) // count)
        shards = []
        for start in range(0, len(sentences), size):
            tokens: List[Token] = []
            for sentence in sentences[start:start + size]:
                tokens.extend(sentence)
                tokens.append(BREAK)
            shards.append(TokenStream(tokens, self.mode))
        return shards

    def to_text(self) -> str:
        """Render one sentence per line; tagged streams keep their tags."""
        lines = []
        for sentence in self.sentences():
            if self.mode == TAGGED:
                lines.append(" ".join(f"{t.word}/{t.tag}" for t in sentence))
            else:
                lines.append(" ".join(t.word for t in sentence))
        return "\n\n".join(lines) + ("\n" if lines else "")

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __getitem__(self, index):
        return self.tokens[index]

    def __eq__(self, other) -> bool:
        if isinstance(other, TokenStream):
            return self.tokens == other.tokens
        if isinstance(other, list):
            return self.tokens == other
        return NotImplemented

    def __repr__(self) -> str:
        return f"TokenStream({self.mode}, {len(self.tokens)} tokens)"
