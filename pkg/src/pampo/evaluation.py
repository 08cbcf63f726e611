"""Scoring extracted entities against gold annotations.

Two matching modes:

``occurrence_half``
    every mention counts; an exact span match earns 1, an overlapping span
    earns 1/2.
``unique_fractional``
    each document's entities are deduplicated by surface; a partial match
    earns the fraction of the gold entity's content tokens it covers
    (connectors and punctuation are not content).

In both modes credit is assigned greedily, highest first, each extracted
item credits at most one gold entity and no gold entity collects more
than 1. Credits are :class:`fractions.Fraction` so sums are exact.
"""

from __future__ import annotations

import enum
import statistics
import unicodedata
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .text import TokenKind, tokenize

__all__ = [
    "CONTENT_CONNECTORS",
    "DocScore",
    "EntityType",
    "EvalReport",
    "GoldAnnotation",
    "MatchCredit",
    "Mention",
    "Mode",
    "compute_metrics",
    "content_tokens",
    "evaluate",
    "f1_score",
    "filter_gold_types",
    "fractional_credit",
    "match_occurrences",
    "match_unique",
    "normalize_surface",
    "occurrence_credit",
    "per_type_recall",
]

CONTENT_CONNECTORS = frozenset({"de", "da", "do", "das", "dos", "e"})


class EntityType(str, enum.Enum):
    PER = "PER"
    LOC = "LOC"
    ORG = "ORG"
    MISC = "MISC"

    def __str__(self) -> str:
        return self.value


class Mode(str, enum.Enum):
    OCCURRENCE = "occurrence_half"
    UNIQUE = "unique_fractional"

    @classmethod
    def parse(cls, name: str) -> "Mode":
        aliases = {"occurrence": cls.OCCURRENCE, "unique": cls.UNIQUE}
        return aliases.get(name) or cls(name)


@dataclass(frozen=True)
class GoldAnnotation:
    doc_id: str
    start: int
    end: int
    surface: str
    type: EntityType


@dataclass(frozen=True)
class Mention:
    """An extracted entity as scored: surface plus optional character span."""

    doc_id: str
    surface: str
    start: int | None = None
    end: int | None = None

    @classmethod
    def coerce(cls, obj) -> "Mention":
        if isinstance(obj, Mention):
            return obj
        return cls(obj.doc_id, obj.surface, getattr(obj, "start", None), getattr(obj, "end", None))


@dataclass(frozen=True)
class MatchCredit:
    extracted: Mention
    gold: GoldAnnotation | None
    credit: Fraction


@dataclass(frozen=True)
class DocScore:
    doc_id: str
    gold_count: int
    extracted_count: int
    credit: Fraction
    recall: float
    precision: float
    f1: float
    flags: tuple[str, ...] = ()

    def defined(self, metric: str) -> bool:
        if metric == "f1":
            return not self.flags
        return f"{metric}_undefined" not in self.flags


@dataclass
class EvalReport:
    recall: float
    precision: float
    f1: float
    gold_count: int
    extracted_count: int
    credit_sum: Fraction
    mode: Mode | None = None
    per_type_recall: dict[EntityType, float] = field(default_factory=dict)
    per_document: list[DocScore] = field(default_factory=list)
    flags: tuple[str, ...] = ()

    def macro(self, metric: str) -> tuple[float, float]:
        """Mean and sample standard deviation of a per-document metric.

        Documents where the metric is undefined (no gold for recall, no
        extractions for precision) are left out.
        """
        values = [getattr(d, metric) for d in self.per_document if d.defined(metric)]
        if not values:
            return 0.0, 0.0
        sd = statistics.stdev(values) if len(values) > 1 else 0.0
        return statistics.fmean(values), sd


# -- surfaces ----------------------------------------------------------------


def normalize_surface(surface: str) -> str:
    return unicodedata.normalize("NFC", " ".join(surface.split()))


def _tokens(surface: str) -> list:
    return tokenize(normalize_surface(surface))


def content_tokens(surface: str, connectors: frozenset[str] = CONTENT_CONNECTORS) -> list[str]:
    """Tokens that carry content: no connectors, no punctuation."""
    return [
        t.surface
        for t in _tokens(surface)
        if t.kind is not TokenKind.PUNCTUATION and t.surface not in connectors
    ]


def _find_contiguous(needle: Sequence[str], haystack: Sequence[str]) -> bool:
    n = len(needle)
    return any(list(haystack[i : i + n]) == list(needle) for i in range(len(haystack) - n + 1))


def fractional_credit(extracted: str, gold: str) -> Fraction:
    """Credit of an extracted surface against one gold surface (unique mode).

    Exact surface equality earns 1. If either token sequence is a
    contiguous part of the other, the credit is the matched content-token
    count over the gold content-token count. Otherwise 0.
    """
    extracted, gold = normalize_surface(extracted), normalize_surface(gold)
    if extracted == gold:
        return Fraction(1)
    gold_content = content_tokens(gold)
    if not gold_content:
        return Fraction(0)
    ext_toks = [t.surface for t in _tokens(extracted)]
    gold_toks = [t.surface for t in _tokens(gold)]
    if not ext_toks:
        return Fraction(0)
    if _find_contiguous(ext_toks, gold_toks):
        return Fraction(len(content_tokens(extracted)), len(gold_content))
    if _find_contiguous(gold_toks, ext_toks):
        return Fraction(1)
    return Fraction(0)


def occurrence_credit(extracted: Mention, gold: GoldAnnotation) -> Fraction:
    """1 for an exact span, 1/2 for an overlapping span, else 0."""
    if extracted.start is None or extracted.end is None:
        raise ValueError(f"occurrence matching needs offsets: {extracted}")
    if extracted.doc_id != gold.doc_id:
        return Fraction(0)
    if (extracted.start, extracted.end) == (gold.start, gold.end):
        if normalize_surface(extracted.surface) == normalize_surface(gold.surface):
            return Fraction(1)
        return Fraction(1, 2)
    if extracted.start < gold.end and gold.start < extracted.end:
        return Fraction(1, 2)
    return Fraction(0)


# -- assignment ----------------------------------------------------------------


def greedy_assign(
    extracted: Sequence[Mention],
    gold: Sequence[GoldAnnotation],
    pair_credit: Callable[[Mention, GoldAnnotation], Fraction],
) -> list[MatchCredit]:
    """One document's greedy credit assignment; one result per extracted item."""
    pairs = []
    for i, ext in enumerate(extracted):
        for j, g in enumerate(gold):
            c = pair_credit(ext, g)
            if c > 0:
                pairs.append((-c, i, j))
    pairs.sort()
    taken: dict[int, int] = {}
    granted: dict[int, Fraction] = {}
    filled: dict[int, Fraction] = defaultdict(Fraction)
    for neg, i, j in pairs:
        if i in taken:
            continue
        room = 1 - filled[j]
        if room <= 0:
            continue
        amount = min(-neg, room)
        taken[i] = j
        granted[i] = amount
        filled[j] += amount
    return [
        MatchCredit(ext, gold[taken[i]], granted[i]) if i in taken else MatchCredit(ext, None, Fraction(0))
        for i, ext in enumerate(extracted)
    ]


def _by_doc(items: Iterable) -> dict[str, list]:
    groups: dict[str, list] = defaultdict(list)
    for item in items:
        groups[item.doc_id].append(item)
    return groups


def _dedupe(items: Iterable, key=lambda x: normalize_surface(x.surface)) -> list:
    seen = set()
    out = []
    for item in items:
        k = key(item)
        if k not in seen:
            seen.add(k)
            out.append(item)
    return out


def _unique_doc(extracted: Sequence[Mention], gold: Sequence[GoldAnnotation]):
    ext = _dedupe(extracted)
    gld = _dedupe(gold)
    return ext, gld, greedy_assign(ext, gld, lambda e, g: fractional_credit(e.surface, g.surface))


def match_unique(extracted: Iterable, gold: Iterable[GoldAnnotation]) -> list[MatchCredit]:
    """Unique-entity matching with fractional partial credit, per document."""
    ext_docs = _by_doc(Mention.coerce(e) for e in extracted)
    gold_docs = _by_doc(gold)
    out: list[MatchCredit] = []
    for doc_id in sorted(set(ext_docs) | set(gold_docs)):
        out.extend(_unique_doc(ext_docs.get(doc_id, []), gold_docs.get(doc_id, []))[2])
    return out


def match_occurrences(extracted: Iterable, gold: Iterable[GoldAnnotation]) -> list[MatchCredit]:
    """Occurrence matching by character span: exact 1, overlap 1/2."""
    ext_docs = _by_doc(Mention.coerce(e) for e in extracted)
    gold_docs = _by_doc(gold)
    out: list[MatchCredit] = []
    for doc_id in sorted(set(ext_docs) | set(gold_docs)):
        out.extend(greedy_assign(ext_docs.get(doc_id, []), gold_docs.get(doc_id, []), occurrence_credit))
    return out


# -- metrics -------------------------------------------------------------------


def f1_score(precision: float, recall: float) -> float:
    if precision + recall <= 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def compute_metrics(
    credits: Fraction | float | int | Iterable[MatchCredit],
    gold_count: int,
    extracted_count: int,
) -> EvalReport:
    """Recall = credit / gold, precision = credit / extracted, F1 = harmonic mean.

    ``credits`` is either the credit sum or the match list. A zero
    denominator gives 0 for that metric and a ``*_undefined`` flag.
    """
    if isinstance(credits, (int, float, Fraction)):
        total = Fraction(credits)
    else:
        total = sum((c.credit for c in credits), Fraction(0))
    flags = []
    if gold_count > 0:
        recall = float(total / gold_count)
    else:
        recall = 0.0
        flags.append("recall_undefined")
    if extracted_count > 0:
        precision = float(total / extracted_count)
    else:
        precision = 0.0
        flags.append("precision_undefined")
    return EvalReport(
        recall=recall,
        precision=precision,
        f1=f1_score(precision, recall),
        gold_count=gold_count,
        extracted_count=extracted_count,
        credit_sum=total,
        flags=tuple(flags),
    )


def filter_gold_types(gold: Iterable[GoldAnnotation], excluded: Iterable[EntityType | str]) -> list[GoldAnnotation]:
    drop = {EntityType(t) for t in excluded}
    return [g for g in gold if g.type not in drop]


def per_type_recall(extracted: Iterable, gold: Iterable[GoldAnnotation]) -> dict[EntityType, float]:
    """Unique-mode recall against the gold of each type separately.

    Only types present in ``gold`` appear in the result.
    """
    extracted = [Mention.coerce(e) for e in extracted]
    gold = list(gold)
    ext_docs = _by_doc(extracted)
    out = {}
    for etype in EntityType:
        typed = [g for g in gold if g.type is etype]
        if not typed:
            continue
        credited = Fraction(0)
        total = 0
        for doc_id, doc_gold in sorted(_by_doc(typed).items()):
            _, gld, credits = _unique_doc(ext_docs.get(doc_id, []), doc_gold)
            credited += sum((c.credit for c in credits), Fraction(0))
            total += len(gld)
        out[etype] = float(credited / total)
    return out


def evaluate(
    extracted: Iterable,
    gold: Iterable[GoldAnnotation],
    mode: Mode | str = Mode.UNIQUE,
    doc_ids: Iterable[str] | None = None,
) -> EvalReport:
    """Full report: micro-averaged metrics, per-document scores, per-type recall.

    ``doc_ids`` fixes the document set (documents with neither gold nor
    extractions still get a per-document row); by default it is the union
    of documents seen on either side.
    """
    mode = Mode.parse(mode) if isinstance(mode, str) else mode
    extracted = [Mention.coerce(e) for e in extracted]
    gold = list(gold)
    ext_docs = _by_doc(extracted)
    gold_docs = _by_doc(gold)
    docs = sorted(set(doc_ids) if doc_ids is not None else set(ext_docs) | set(gold_docs))

    per_doc = []
    total_credit = Fraction(0)
    total_gold = total_ext = 0
    for doc_id in docs:
        ext = ext_docs.get(doc_id, [])
        gld = gold_docs.get(doc_id, [])
        if mode is Mode.UNIQUE:
            ext, gld, credits = _unique_doc(ext, gld)
        else:
            credits = greedy_assign(ext, gld, occurrence_credit)
        credit = sum((c.credit for c in credits), Fraction(0))
        m = compute_metrics(credit, len(gld), len(ext))
        per_doc.append(DocScore(doc_id, len(gld), len(ext), credit, m.recall, m.precision, m.f1, m.flags))
        total_credit += credit
        total_gold += len(gld)
        total_ext += len(ext)

    report = compute_metrics(total_credit, total_gold, total_ext)
    report.mode = mode
    report.per_document = per_doc
    report.per_type_recall = per_type_recall(extracted, gold)
    return report


def doc_metric(report: EvalReport, metric: str) -> Mapping[str, float]:
    """Per-document values of ``metric`` keyed by document id."""
    return {d.doc_id: getattr(d, metric) for d in report.per_document}
