"""Phase 2: tag candidates, clip prefixes (CPB), prune by tags (PPB) and terms (TPPB)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .candidates import CandidateEntity, generate_candidates
from .patterns import PatternBases
from .tagging import TagProvider, TaggingError, tag_candidate
from .tags import PosTag
from .text import Document, Sentence

__all__ = ["NamedEntity", "SelectionTrace", "extract", "select_entities", "select_one"]


@dataclass(frozen=True)
class NamedEntity:
    doc_id: str
    sentence_index: int
    token_span: tuple[int, int]
    surface: str
    start: int
    end: int
    candidate: CandidateEntity
    rules: tuple[str, ...] = ()
    tags: tuple[PosTag, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "doc": self.doc_id,
            "surface": self.surface,
            "start": self.start,
            "end": self.end,
            "sentence": self.sentence_index,
        }


@dataclass(frozen=True)
class SelectionTrace:
    """What happened to one candidate: the survivor or the rule that removed it."""

    candidate: CandidateEntity
    entity: NamedEntity | None
    rules: tuple[str, ...]


def select_one(
    candidate: CandidateEntity,
    sentence: Sentence,
    bases: PatternBases,
    provider: TagProvider,
) -> SelectionTrace:
    try:
        tagged = tag_candidate(provider, sentence, candidate.token_span)
    except TaggingError as exc:
        raise TaggingError(
            exc.provider,
            f"while tagging candidate {candidate.surface!r} "
            f"(doc {candidate.doc_id!r}, sentence {candidate.sentence_index}): {exc}",
        ) from exc

    tokens = list(tagged.tokens)
    tags = list(tagged.tags)
    rules: list[str] = []

    # clip until no pattern matches; each pass removes >= 1 token
    changed = True
    while changed and tokens:
        changed = False
        for i, cp in enumerate(bases.cpb):
            if tokens and cp.matches(tags):
                del tokens[: cp.clip_count]
                del tags[: cp.clip_count]
                rules.append(f"cpb:{i}")
                changed = True
    if not tokens:
        return SelectionTrace(candidate, None, (*rules, "empty"))

    for i, pp in enumerate(bases.ppb):
        if pp.matches(tags):
            return SelectionTrace(candidate, None, (*rules, f"ppb:{i}"))

    surface = " ".join(t.surface for t in tokens)
    if surface in bases.tppb:
        return SelectionTrace(candidate, None, (*rules, "tppb"))

    clipped = len(candidate) - len(tokens)
    first = candidate.token_span[0] + clipped
    entity = NamedEntity(
        candidate.doc_id,
        candidate.sentence_index,
        (first, candidate.token_span[1]),
        surface,
        tokens[0].start,
        tokens[-1].end,
        candidate,
        tuple(rules),
        tuple(tags),
    )
    return SelectionTrace(candidate, entity, tuple(rules))


def select_entities(
    candidates: Sequence[CandidateEntity],
    bases: PatternBases,
    provider: TagProvider,
) -> list[NamedEntity]:
    """Run entity selection over ``candidates``; survivors keep their order."""
    out = []
    for candidate in candidates:
        if candidate.sentence is None:
            raise ValueError(f"candidate {candidate.surface!r} carries no sentence context")
        trace = select_one(candidate, candidate.sentence, bases, provider)
        if trace.entity is not None:
            out.append(trace.entity)
    return out


def extract(doc: Document, bases: PatternBases, provider: TagProvider) -> list[NamedEntity]:
    """Both phases over one document: entities in text order, repeats kept."""
    return select_entities(generate_candidates(doc, bases), bases, provider)
