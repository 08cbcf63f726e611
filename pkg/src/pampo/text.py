"""Sentence splitting and tokenization with character offsets.

Offsets count Unicode code points (Python ``str`` indices), so every token
satisfies ``text[token.start:token.end] == token.surface``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

__all__ = [
    "ABBREVIATIONS",
    "Document",
    "Sentence",
    "Token",
    "TokenKind",
    "segment",
    "split_sentences",
    "tokenize",
]

# Compared lowercase. Single letters (initials such as "G. L.") are also
# treated as abbreviations, see _is_abbreviation.
ABBREVIATIONS = frozenset(
    {
        "cf", "dr", "dra", "sr", "sra", "srs", "eng", "prof", "profa", "av",
        "art", "arts", "p", "pp", "séc", "sec", "etc", "ex", "exmo", "exma",
        "n", "nº", "vol", "cap", "fig", "pág", "págs", "ed", "org", "lda",
        "sto", "sta", "gen", "cel", "ten", "dom", "vs",
    }
)

_LETTER = r"[^\W\d_]"
_MARKS = "\u0300-\u036f"
_WORD = rf"(?:[dD]['’](?={_LETTER}))?(?:{_LETTER}[{_MARKS}]*)+(?:-(?:{_LETTER}[{_MARKS}]*)+)*"
_NUMBER = r"\d+(?:[.,]\d+)*"
_TOKEN_RE = re.compile(rf"(?P<word>{_WORD})|(?P<number>{_NUMBER})|(?P<punct>\S)")

_TERMINATORS = ".!?;"
_CLOSERS = "\"'”’»)]"


class TokenKind(str, enum.Enum):
    WORD = "word"
    NUMBER = "number"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    kind: TokenKind

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD

    @property
    def first_letter(self) -> str:
        """First alphabetic character, skipping a leading ``d'`` contraction."""
        s = self.surface
        if len(s) > 2 and s[0] in "dD" and s[1] in "'’":
            s = s[2:]
        for ch in s:
            if ch.isalpha():
                return ch
        return ""

    @property
    def is_capitalized(self) -> bool:
        return self.is_word and self.first_letter.isupper()


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    index: int
    doc_id: str = ""

    @property
    def start(self) -> int:
        return self.tokens[0].start

    @property
    def end(self) -> int:
        return self.tokens[-1].end

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    sentences: tuple[Sentence, ...] = field(default=())

    @property
    def tokens(self) -> list[Token]:
        return [t for s in self.sentences for t in s.tokens]

    def word_count(self) -> int:
        return sum(1 for s in self.sentences for t in s.tokens if t.is_word)


def _is_abbreviation(text: str, period: int) -> bool:
    i = period
    while i > 0 and (text[i - 1].isalpha() or text[i - 1] == "º"):
        i -= 1
    word = text[i:period]
    if not word:
        return False
    if i > 0 and not (text[i - 1].isspace() or text[i - 1] in "(\"'“‘«"):
        return False
    return len(word) == 1 or word.lower() in ABBREVIATIONS


def _trimmed(text: str, start: int, end: int) -> tuple[int, int] | None:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return (start, end) if end > start else None


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Split ``text`` into ``(start, end)`` sentence spans, whitespace-trimmed.

    A sentence ends at ``.``, ``!``, ``?``, ``;`` or a newline. A period ends
    a sentence only when followed by whitespace, a closing quote or the end
    of text, and not when it closes an abbreviation or a single-letter
    initial. Runs of terminators and trailing closing quotes stay attached
    to the sentence they end.
    """
    spans: list[tuple[int, int]] = []
    n = len(text)
    start = 0
    i = 0
    while i < n:
        ch = text[i]
        if ch == "\n":
            span = _trimmed(text, start, i)
            if span:
                spans.append(span)
            start = i + 1
        elif ch in _TERMINATORS:
            j = i
            while j < n and text[j] in _TERMINATORS:
                j += 1
            while j < n and text[j] in _CLOSERS:
                j += 1
            boundary = True
            if ch == "." and j == i + 1:
                if j < n and not text[j].isspace() and text[j - 1] not in _CLOSERS:
                    boundary = False
                elif _is_abbreviation(text, i):
                    boundary = False
            if boundary:
                span = _trimmed(text, start, j)
                if span:
                    spans.append(span)
                start = j
            i = j
            continue
        i += 1
    span = _trimmed(text, start, n)
    if span:
        spans.append(span)
    return spans


def tokenize(sentence_text: str, base_offset: int = 0) -> list[Token]:
    """Tokenize a sentence; offsets are shifted by ``base_offset``.

    Letter runs (hyphen-joined, with an optional leading ``d'``) are words,
    digit runs are numbers and any other non-space character is a
    single-character punctuation token.
    """
    tokens = []
    for m in _TOKEN_RE.finditer(sentence_text):
        kind = TokenKind(
            {"word": "word", "number": "number", "punct": "punctuation"}[m.lastgroup]
        )
        tokens.append(Token(m.group(), base_offset + m.start(), base_offset + m.end(), kind))
    return tokens


def segment(text: str, doc_id: str = "") -> Document:
    """Build a :class:`Document` with sentences and tokens from raw text."""
    sentences = []
    for start, end in split_sentences(text):
        toks = tokenize(text[start:end], start)
        if toks:
            sentences.append(Sentence(tuple(toks), len(sentences), doc_id))
    return Document(doc_id, text, tuple(sentences))
