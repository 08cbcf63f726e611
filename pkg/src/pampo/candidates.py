"""Phase 1: collect candidate entities by matching the TPB over each sentence."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .patterns import Element, Group, Item, PatternBases, TermPattern
from .text import Document, Sentence, Token

__all__ = ["CandidateEntity", "PatternMatcher", "generate_candidates"]


@dataclass(frozen=True)
class CandidateEntity:
    doc_id: str
    sentence_index: int
    token_span: tuple[int, int]  # inclusive
    surface: str
    matched_pattern: int
    start: int = 0  # character offsets into the document text
    end: int = 0
    sentence: Sentence | None = field(default=None, compare=False, repr=False)

    @classmethod
    def from_tokens(cls, sentence: Sentence, first: int, last: int, pattern: int) -> "CandidateEntity":
        toks = sentence.tokens[first : last + 1]
        return cls(
            sentence.doc_id,
            sentence.index,
            (first, last),
            " ".join(t.surface for t in toks),
            pattern,
            toks[0].start,
            toks[-1].end,
            sentence,
        )

    def __len__(self) -> int:
        return self.token_span[1] - self.token_span[0] + 1


class PatternMatcher:
    """Element-level matcher for the term patterns of one set of bases."""

    def __init__(self, bases: PatternBases):
        self.bases = bases

    def element_matches(self, element: Element, token: Token) -> bool:
        if element.kind == "CAP":
            return token.is_capitalized
        if element.kind == "TRIGGER":
            return (
                token.is_word
                and token.first_letter.islower()
                and token.surface.lower() in self.bases.triggers
            )
        if element.kind == "CONNECTOR":
            return token.surface in self.bases.connectors
        return token.is_word and token.surface.lower() == element.word.lower()

    def is_connector(self, token: Token) -> bool:
        return token.surface in self.bases.connectors

    def _atom_ends(self, atom: Element | Group, tokens: Sequence[Token], pos: int) -> set[int]:
        if isinstance(atom, Element):
            if pos < len(tokens) and self.element_matches(atom, tokens[pos]):
                return {pos + 1}
            return set()
        ends: set[int] = set()
        for alt in atom.alternatives:
            ends |= self._seq_ends(alt, 0, tokens, pos)
        return ends

    def _item_ends(self, item: Item, tokens: Sequence[Token], pos: int) -> set[int]:
        results = {pos} if item.min == 0 else set()
        frontier = {pos}
        seen = {pos}
        count = 0
        while frontier and (item.max is None or count < item.max):
            count += 1
            reached: set[int] = set()
            for p in frontier:
                reached |= self._atom_ends(item.atom, tokens, p)
            if count >= item.min:
                results |= reached
                frontier = reached - seen
            else:
                frontier = reached
            seen |= reached
        return results

    def _seq_ends(self, items: Sequence[Item], i: int, tokens: Sequence[Token], pos: int) -> set[int]:
        if i == len(items):
            return {pos}
        ends: set[int] = set()
        for p in self._item_ends(items[i], tokens, pos):
            ends |= self._seq_ends(items, i + 1, tokens, p)
        return ends

    def match_ends(self, pattern: TermPattern, tokens: Sequence[Token], start: int) -> list[int]:
        """Exclusive end positions of non-empty matches of ``pattern`` at ``start``.

        Matches that begin or end on a connector are rejected.
        """
        if start >= len(tokens) or self.is_connector(tokens[start]):
            return []
        ends = self._seq_ends(pattern.items, 0, tokens, start)
        return sorted(e for e in ends if e > start and not self.is_connector(tokens[e - 1]))

    def scan(self, pattern: TermPattern, tokens: Sequence[Token]) -> list[tuple[int, int]]:
        """Greedy left-to-right longest non-overlapping matches, inclusive spans."""
        spans = []
        pos = 0
        while pos < len(tokens):
            ends = self.match_ends(pattern, tokens, pos)
            if ends:
                spans.append((pos, ends[-1] - 1))
                pos = ends[-1]
            else:
                pos += 1
        return spans


def sentence_candidates(sentence: Sentence, matcher: PatternMatcher) -> list[CandidateEntity]:
    found: dict[tuple[int, int], int] = {}
    for index, pattern in enumerate(matcher.bases.tpb):
        for span in matcher.scan(pattern, sentence.tokens):
            found.setdefault(span, index)
    # keep maximal spans only
    spans = sorted(found)
    maximal = [
        s for s in spans
        if not any(o != s and o[0] <= s[0] and s[1] <= o[1] for o in spans)
    ]
    return [CandidateEntity.from_tokens(sentence, a, b, found[(a, b)]) for a, b in maximal]


def generate_candidates(doc: Document, bases: PatternBases) -> list[CandidateEntity]:
    """Candidate entities of ``doc`` in document order (repetitions kept).

    Every TPB pattern is scanned over every sentence; identical spans from
    different patterns are reported once, with the first matching pattern,
    and spans nested inside a longer match are dropped.
    """
    matcher = PatternMatcher(bases)
    out: list[CandidateEntity] = []
    for sentence in doc.sentences:
        out.extend(sentence_candidates(sentence, matcher))
    return out
