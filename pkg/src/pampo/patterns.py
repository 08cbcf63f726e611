"""Pattern bases: TPB, trigger lexicon, connectors, CPB, PPB and TPPB.

Pattern-base files are line oriented::

    [tpb]
    TRIGGER? CONNECTOR? CAP (CONNECTOR CAP)*
    [cpb]
    pron-det : 1
    [ppb]
    none-of prop n
    [tppb]
    Hoje
    @stopwords

Any section left out of a file falls back to the shipped defaults.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence, Union

from .tags import PosTag, parse_tag

__all__ = [
    "ClippingPattern",
    "Element",
    "Group",
    "Item",
    "PatternBases",
    "PatternFileError",
    "PruningPattern",
    "TermPattern",
    "TermPruningBase",
    "default_bases",
    "dump_pattern_bases",
    "load_pattern_bases",
    "normalize_term",
    "parse_pattern_bases",
    "parse_term_pattern",
    "stopwords",
]

SECTIONS = ("tpb", "triggers", "connectors", "cpb", "ppb", "tppb")
ELEMENT_KINDS = ("CAP", "TRIGGER", "CONNECTOR")


class PatternFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<string>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


def normalize_term(term: str) -> str:
    """Case-insensitive NFC key used for TPPB membership."""
    return unicodedata.normalize("NFC", " ".join(term.split())).casefold()


# -- term patterns ---------------------------------------------------------


@dataclass(frozen=True)
class Element:
    kind: str  # CAP, TRIGGER, CONNECTOR or LITERAL
    word: str = ""

    def __str__(self) -> str:
        return self.word if self.kind == "LITERAL" else self.kind


@dataclass(frozen=True)
class Group:
    alternatives: tuple[tuple["Item", ...], ...]

    def __str__(self) -> str:
        return "(" + " | ".join(" ".join(map(str, alt)) for alt in self.alternatives) + ")"


@dataclass(frozen=True)
class Item:
    atom: Union[Element, Group]
    min: int = 1
    max: int | None = 1

    def __str__(self) -> str:
        q = {(1, 1): "", (0, 1): "?", (0, None): "*", (1, None): "+"}.get((self.min, self.max))
        if q is None:
            q = f"{{{self.min}}}" if self.min == self.max else f"{{{self.min},{'' if self.max is None else self.max}}}"
        return f"{self.atom}{q}"


@dataclass(frozen=True)
class TermPattern:
    items: tuple[Item, ...]

    def __str__(self) -> str:
        return " ".join(map(str, self.items))

    def elements(self) -> Iterable[Element]:
        stack = list(self.items)
        while stack:
            atom = stack.pop().atom
            if isinstance(atom, Group):
                for alt in atom.alternatives:
                    stack.extend(alt)
            else:
                yield atom


_PATTERN_TOKEN = re.compile(r"\s*(\(|\)|\||\?|\*|\+|\{\d+(?:,\d*)?\}|[^\s()|?*+{}]+)")


def parse_term_pattern(text: str) -> TermPattern:
    """Parse one TPB line, e.g. ``TRIGGER? CAP (CONNECTOR{1,2} CAP | CAP)*``.

    Bare words other than CAP/TRIGGER/CONNECTOR are literal, matched
    case-insensitively.
    """
    pieces = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _PATTERN_TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse pattern near {text[pos:]!r}")
        pieces.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    i = 0

    def parse_alternatives() -> tuple[tuple[Item, ...], ...]:
        nonlocal i
        alts = [parse_sequence()]
        while i < len(pieces) and pieces[i] == "|":
            i += 1
            alts.append(parse_sequence())
        return tuple(alts)

    def parse_sequence() -> tuple[Item, ...]:
        nonlocal i
        items = []
        while i < len(pieces) and pieces[i] not in (")", "|"):
            items.append(parse_item())
        if not items:
            raise ValueError(f"empty sequence in pattern {text!r}")
        return tuple(items)

    def parse_item() -> Item:
        nonlocal i
        tok = pieces[i]
        i += 1
        if tok == "(":
            atom: Union[Element, Group] = Group(parse_alternatives())
            if i >= len(pieces) or pieces[i] != ")":
                raise ValueError(f"unbalanced parenthesis in pattern {text!r}")
            i += 1
        elif tok in ("?", "*", "+", ")", "|") or tok.startswith("{"):
            raise ValueError(f"unexpected {tok!r} in pattern {text!r}")
        elif tok in ELEMENT_KINDS:
            atom = Element(tok)
        else:
            atom = Element("LITERAL", tok)
        lo, hi = 1, 1
        if i < len(pieces):
            q = pieces[i]
            if q in ("?", "*", "+"):
                lo, hi = {"?": (0, 1), "*": (0, None), "+": (1, None)}[q]
                i += 1
            elif q.startswith("{"):
                body = q[1:-1]
                if "," in body:
                    a, b = body.split(",")
                    lo, hi = int(a), (int(b) if b else None)
                else:
                    lo = hi = int(body)
                if hi is not None and (hi < lo or hi == 0):
                    raise ValueError(f"bad repetition {q} in pattern {text!r}")
                i += 1
        return Item(atom, lo, hi)

    if not pieces:
        raise ValueError("empty pattern")
    items = parse_alternatives()
    if i != len(pieces):
        raise ValueError(f"unexpected {pieces[i]!r} in pattern {text!r}")
    if len(items) > 1:
        items = ((Item(Group(items)),),)
    pattern = TermPattern(items[0])
    if not any(e.kind in ("CAP", "TRIGGER") for e in pattern.elements()):
        raise ValueError(f"pattern {text!r} needs at least one CAP or TRIGGER element")
    return pattern


# -- selection patterns ----------------------------------------------------


@dataclass(frozen=True)
class ClippingPattern:
    """Remove ``clip_count`` leading tokens when the tag prefix matches."""

    tags: tuple[PosTag, ...]
    clip_count: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.clip_count <= len(self.tags):
            raise ValueError(
                f"clip_count {self.clip_count} outside 1..{len(self.tags)} for {self}"
            )

    def matches(self, tags: Sequence[PosTag]) -> bool:
        return tuple(tags[: len(self.tags)]) == self.tags

    def __str__(self) -> str:
        return " ".join(t.value for t in self.tags) + f" : {self.clip_count}"


PRUNING_KINDS = ("none-of", "any-of", "only", "exact")


@dataclass(frozen=True)
class PruningPattern:
    """Predicate over a candidate's whole tag sequence.

    ``none-of``: no tag from the set occurs; ``any-of``: some tag occurs;
    ``only``: every tag is in the set; ``exact``: the sequence equals it.
    """

    kind: str
    tags: tuple[PosTag, ...]

    def __post_init__(self) -> None:
        if self.kind not in PRUNING_KINDS:
            raise ValueError(f"unknown pruning pattern kind {self.kind!r}")
        if not self.tags:
            raise ValueError("pruning pattern needs at least one tag")

    def matches(self, tags: Sequence[PosTag]) -> bool:
        wanted = set(self.tags)
        if self.kind == "none-of":
            return not any(t in wanted for t in tags)
        if self.kind == "any-of":
            return any(t in wanted for t in tags)
        if self.kind == "only":
            return all(t in wanted for t in tags)
        return tuple(tags) == self.tags

    def __str__(self) -> str:
        return f"{self.kind} " + " ".join(t.value for t in self.tags)


@dataclass(frozen=True)
class TermPruningBase:
    terms: tuple[str, ...]

    @classmethod
    def from_terms(cls, terms: Iterable[str]) -> "TermPruningBase":
        seen = set()
        kept = []
        for term in terms:
            term = unicodedata.normalize("NFC", " ".join(term.split()))
            key = term.casefold()
            if term and key not in seen:
                seen.add(key)
                kept.append(term)
        return cls(tuple(kept))

    @property
    def keys(self) -> frozenset[str]:
        return _keys(self.terms)

    def __contains__(self, surface: object) -> bool:
        return isinstance(surface, str) and normalize_term(surface) in self.keys

    def __len__(self) -> int:
        return len(self.terms)


@lru_cache(maxsize=64)
def _keys(terms: tuple[str, ...]) -> frozenset[str]:
    return frozenset(t.casefold() for t in terms)


@dataclass(frozen=True)
class PatternBases:
    tpb: tuple[TermPattern, ...]
    triggers: frozenset[str]
    connectors: frozenset[str]
    cpb: tuple[ClippingPattern, ...]
    ppb: tuple[PruningPattern, ...]
    tppb: TermPruningBase

    def __post_init__(self) -> None:
        if not self.tpb:
            raise ValueError("TPB is empty")
        if not self.triggers:
            raise ValueError("trigger lexicon is empty")
        if any(t != t.lower() for t in self.triggers):
            raise ValueError("trigger lexicon entries must be lowercase")


# -- file format -----------------------------------------------------------


def _read_resource(name: str) -> str:
    return resources.files("pampo").joinpath("data", name).read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def stopwords() -> tuple[str, ...]:
    """The shipped Portuguese stopword list."""
    lines = _read_resource("stopwords_pt.txt").splitlines()
    return tuple(w.strip() for w in lines if w.strip() and not w.startswith("#"))


def _parse_sections(text: str, source: str) -> dict[str, list[tuple[int, str]]]:
    sections: dict[str, list[tuple[int, str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current not in SECTIONS:
                raise PatternFileError(f"unknown section [{current}]", lineno, source)
            if current in sections:
                raise PatternFileError(f"duplicate section [{current}]", lineno, source)
            sections[current] = []
            continue
        if current is None:
            raise PatternFileError("entry outside of a section", lineno, source)
        sections[current].append((lineno, line))
    return sections


def _tags(names: Iterable[str], lineno: int, source: str) -> tuple[PosTag, ...]:
    try:
        return tuple(parse_tag(n, strict=True) for n in names)
    except ValueError as exc:
        raise PatternFileError(str(exc), lineno, source) from None


def _build(sections: dict[str, list[tuple[int, str]]], source: str, fallback: PatternBases | None) -> PatternBases:
    def missing(name: str) -> bool:
        return name not in sections and fallback is not None

    if missing("tpb"):
        tpb = fallback.tpb
    else:
        entries = sections.get("tpb", [])
        if not entries:
            raise PatternFileError("empty TPB", None, source)
        tpb_list = []
        for lineno, line in entries:
            try:
                tpb_list.append(parse_term_pattern(line))
            except ValueError as exc:
                raise PatternFileError(str(exc), lineno, source) from None
        tpb = tuple(tpb_list)

    if missing("triggers"):
        triggers = fallback.triggers
    else:
        triggers = frozenset(line.lower() for _, line in sections.get("triggers", []))
        if not triggers:
            raise PatternFileError("empty trigger lexicon", None, source)

    connectors = (
        fallback.connectors
        if missing("connectors")
        else frozenset(line for _, line in sections.get("connectors", []))
    )

    if missing("cpb"):
        cpb = fallback.cpb
    else:
        cpb_list = []
        for lineno, line in sections.get("cpb", []):
            names, sep, count = line.rpartition(":")
            if not sep:
                names, count = line, "1"
            try:
                clip = int(count)
            except ValueError:
                raise PatternFileError(f"bad clip count {count.strip()!r}", lineno, source) from None
            tags = _tags(names.split(), lineno, source)
            try:
                cpb_list.append(ClippingPattern(tags, clip))
            except ValueError as exc:
                raise PatternFileError(str(exc), lineno, source) from None
        cpb = tuple(cpb_list)

    if missing("ppb"):
        ppb = fallback.ppb
    else:
        ppb_list = []
        for lineno, line in sections.get("ppb", []):
            kind, *names = line.split()
            if kind not in PRUNING_KINDS:
                raise PatternFileError(f"unknown pruning pattern kind {kind!r}", lineno, source)
            if not names:
                raise PatternFileError("pruning pattern needs at least one tag", lineno, source)
            ppb_list.append(PruningPattern(kind, _tags(names, lineno, source)))
        ppb = tuple(ppb_list)

    if missing("tppb"):
        tppb = fallback.tppb
    else:
        terms: list[str] = []
        for lineno, line in sections.get("tppb", []):
            if line == "@stopwords":
                terms.extend(stopwords())
            elif line.startswith("@"):
                raise PatternFileError(f"unknown directive {line!r}", lineno, source)
            else:
                terms.append(line)
        tppb = TermPruningBase.from_terms(terms)

    try:
        return PatternBases(tpb, triggers, connectors, cpb, ppb, tppb)
    except ValueError as exc:
        raise PatternFileError(str(exc), None, source) from None


def parse_pattern_bases(text: str, source: str = "<string>", *, defaults: bool = True) -> PatternBases:
    """Parse pattern-base text; missing sections come from the defaults."""
    fallback = default_bases() if defaults else None
    return _build(_parse_sections(text, source), source, fallback)


def load_pattern_bases(path: str | Path) -> PatternBases:
    """Load a pattern-base file. A missing file raises ``FileNotFoundError``."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_pattern_bases(text, str(path))


@lru_cache(maxsize=1)
def default_bases() -> PatternBases:
    """The shipped Portuguese bases (appendix lists plus stopwords)."""
    source = "default_patterns.txt"
    return _build(_parse_sections(_read_resource(source), source), source, None)


def dump_pattern_bases(bases: PatternBases) -> str:
    """Serialize ``bases`` in the pattern-file format (stopwords expanded)."""
    out = ["[tpb]", *map(str, bases.tpb), ""]
    out += ["[triggers]", *sorted(bases.triggers), ""]
    out += ["[connectors]", *sorted(bases.connectors), ""]
    out += ["[cpb]", *map(str, bases.cpb), ""]
    out += ["[ppb]", *map(str, bases.ppb), ""]
    out += ["[tppb]", *bases.tppb.terms, ""]
    return "\n".join(out)
