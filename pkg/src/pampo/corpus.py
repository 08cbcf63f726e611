"""Corpus and annotation files, corpus statistics and candidate frequency reports.

File formats:

* corpus: a directory of UTF-8 ``.txt`` files, one document each; the id
  is the path relative to the directory (POSIX separators).
* gold: JSON lines ``{"doc", "start", "end", "surface", "type"}``.
* extractor output: JSON lines ``{"doc", "surface", "start"?, "end"?}``.
* reports: CSV with a header row, UTF-8, LF line endings.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import statistics
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .candidates import CandidateEntity
from .evaluation import EntityType, GoldAnnotation, Mention
from .selection import NamedEntity
from .text import Document, segment

__all__ = [
    "CorpusStats",
    "FrequencyRow",
    "corpus_stats",
    "frequency_report",
    "load_corpus",
    "load_gold",
    "load_mentions",
    "read_document",
    "write_csv",
]

logger = logging.getLogger(__name__)


def read_document(path: str | Path, doc_id: str | None = None) -> Document:
    path = Path(path)
    text = path.read_bytes().decode("utf-8")
    return segment(text, doc_id if doc_id is not None else path.name)


def load_corpus(
    directory: str | Path,
    failures: list[tuple[str, str]] | None = None,
) -> list[Document]:
    """Load and segment every ``.txt`` file under ``directory``, sorted by id.

    Unreadable or non-UTF-8 files raise, unless a ``failures`` list is
    given: then each failure is appended as ``(doc_id, message)``, logged,
    and loading continues.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise NotADirectoryError(f"corpus directory not found: {directory}")
    docs = []
    for path in sorted(directory.rglob("*.txt")):
        doc_id = path.relative_to(directory).as_posix()
        try:
            docs.append(read_document(path, doc_id))
        except (OSError, UnicodeDecodeError) as exc:
            if failures is None:
                raise
            message = f"{type(exc).__name__}: {exc}"
            logger.warning("skipping %s: %s", doc_id, message)
            failures.append((doc_id, message))
    return docs


def _jsonl(path: str | Path) -> Iterable[tuple[int, dict]]:
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield lineno, json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from None


def load_gold(path: str | Path, documents: Sequence[Document] | None = None) -> list[GoldAnnotation]:
    """Read gold annotations; with ``documents``, check spans against the text."""
    texts = {d.id: d.text for d in documents} if documents is not None else None
    gold = []
    for lineno, obj in _jsonl(path):
        try:
            ann = GoldAnnotation(
                str(obj["doc"]), int(obj["start"]), int(obj["end"]), obj["surface"], EntityType(obj["type"])
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise ValueError(f"{path}:{lineno}: bad gold annotation ({exc})") from None
        if texts is not None and ann.doc_id in texts:
            if texts[ann.doc_id][ann.start : ann.end] != ann.surface:
                raise ValueError(
                    f"{path}:{lineno}: span [{ann.start}, {ann.end}) of {ann.doc_id!r} "
                    f"does not read {ann.surface!r}"
                )
        gold.append(ann)
    return gold


def load_mentions(path: str | Path) -> list[Mention]:
    """Read an extractor dump (offsets optional)."""
    out = []
    for lineno, obj in _jsonl(path):
        try:
            start, end = obj.get("start"), obj.get("end")
            out.append(
                Mention(
                    str(obj["doc"]),
                    obj["surface"],
                    None if start is None else int(start),
                    None if end is None else int(end),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"{path}:{lineno}: bad extractor record ({exc})") from None
    return out


# -- statistics ------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusStats:
    documents: int
    words_min: int
    words_max: int
    words_mean: float
    entities: int
    entities_by_type: dict[EntityType, int]

    def rows(self) -> list[tuple[str, object]]:
        rows: list[tuple[str, object]] = [
            ("documents", self.documents),
            ("words_min", self.words_min),
            ("words_max", self.words_max),
            ("words_mean", round(self.words_mean, 1)),
            ("entities", self.entities),
        ]
        rows += [(f"entities_{t.value}", self.entities_by_type[t]) for t in EntityType]
        return rows


def corpus_stats(docs: Sequence[Document], gold: Iterable[GoldAnnotation] = ()) -> CorpusStats:
    """Document count, words per document and gold entity counts by type.

    Words are word-kind tokens; numbers and punctuation are not counted.
    """
    ids = {d.id for d in docs}
    by_type = Counter()
    dangling = set()
    for ann in gold:
        if ann.doc_id not in ids:
            dangling.add(ann.doc_id)
        by_type[ann.type] += 1
    if dangling:
        raise ValueError(f"gold refers to unknown documents: {sorted(dangling)}")
    counts = [d.word_count() for d in docs]
    return CorpusStats(
        documents=len(docs),
        words_min=min(counts, default=0),
        words_max=max(counts, default=0),
        words_mean=statistics.fmean(counts) if counts else 0.0,
        entities=sum(by_type.values()),
        entities_by_type={t: by_type.get(t, 0) for t in EntityType},
    )


@dataclass(frozen=True)
class FrequencyRow:
    surface: str
    candidates: int
    selected: int

    @property
    def kept(self) -> bool:
        return self.selected > 0


def frequency_report(
    candidates: Iterable[CandidateEntity],
    entities: Iterable[NamedEntity],
    min_count: int = 1,
) -> list[FrequencyRow]:
    """How often each candidate surface occurred and how often it survived.

    Survivors are counted under the surface of the candidate they came
    from, so a clipped entity still credits its candidate. Rows with fewer
    than ``min_count`` candidates are dropped; order is by candidate count
    descending, then surface.
    """
    cand = Counter(c.surface for c in candidates)
    sel = Counter(e.candidate.surface for e in entities)
    rows = [FrequencyRow(s, n, sel.get(s, 0)) for s, n in cand.items() if n >= min_count]
    rows.sort(key=lambda r: (-r.candidates, r.surface))
    return rows


def write_csv(rows: Iterable[Sequence], header: Sequence[str], out: TextIO | None = None) -> str:
    """Write CSV with LF line endings; returns the text when ``out`` is None."""
    buf = out if out is not None else io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue() if out is None else ""
