"""POS tag providers.

A provider tags whole sentences so that position (sentence-initial or not)
is available; :func:`tag_candidate` slices the result for a candidate span.
Two providers ship: :class:`BuiltinTagger`, a deterministic lexicon and
suffix tagger, and :class:`PretaggedProvider`, which replays tags produced
by an external tagger.
"""

from __future__ import annotations

import abc
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .tags import PosTag, parse_tag
from .text import Document, Sentence, Token, TokenKind

__all__ = [
    "AlignmentError",
    "BuiltinTagger",
    "PretaggedProvider",
    "TagProvider",
    "TaggedCandidate",
    "TaggingError",
    "builtin_tagger",
    "pretagged_provider",
    "tag_candidate",
    "write_pretagged",
]


class TaggingError(RuntimeError):
    """A provider failed; ``provider`` names it."""

    def __init__(self, provider: str, message: str):
        self.provider = provider
        super().__init__(f"[{provider}] {message}")


class AlignmentError(TaggingError):
    def __init__(self, provider: str, doc_id: str, token_index: int, message: str):
        self.doc_id = doc_id
        self.token_index = token_index
        super().__init__(provider, f"doc {doc_id!r}, token {token_index}: {message}")


class TagProvider(abc.ABC):
    name: str = "provider"

    @abc.abstractmethod
    def tag_sentence(self, sentence: Sentence) -> list[PosTag]:
        """Return exactly one tag per token of ``sentence``."""


@dataclass(frozen=True)
class TaggedCandidate:
    tokens: tuple[Token, ...]
    tags: tuple[PosTag, ...]

    def __post_init__(self) -> None:
        if len(self.tokens) != len(self.tags):
            raise ValueError("tokens and tags differ in length")


def tag_candidate(provider: TagProvider, sentence: Sentence, span: tuple[int, int]) -> TaggedCandidate:
    """Tag the inclusive token ``span`` of ``sentence`` in sentence context."""
    first, last = span
    if not 0 <= first <= last < len(sentence.tokens):
        raise IndexError(f"span {span} outside sentence of {len(sentence.tokens)} tokens")
    try:
        tags = provider.tag_sentence(sentence)
    except TaggingError:
        raise
    except Exception as exc:
        raise TaggingError(provider.name, f"{type(exc).__name__}: {exc}") from exc
    if len(tags) != len(sentence.tokens):
        raise TaggingError(
            provider.name,
            f"returned {len(tags)} tags for {len(sentence.tokens)} tokens",
        )
    return TaggedCandidate(sentence.tokens[first : last + 1], tuple(tags[first : last + 1]))


# -- builtin tagger ----------------------------------------------------------

_CLOSED_CLASS = {
    PosTag.ART: "o a os as um uma uns umas",
    PosTag.PRON_DET: (
        "este esta estes estas esse essa esses essas aquele aquela aqueles aquelas "
        "isto isso aquilo nenhum nenhuma nenhuns nenhumas algum alguma alguns algumas "
        "todo toda todos todas tudo outro outra outros outras muitos muitas poucos poucas "
        "vários várias cada qualquer quaisquer tal tais seu sua seus suas meu minha meus "
        "minhas teu tua teus tuas nosso nossa nossos nossas mesmo mesma mesmos mesmas "
        "próprio própria tanto tanta tantos tantas qual quais cujo cuja cujos cujas "
        "deste desta destes destas desse dessa desses dessas daquele daquela "
        "neste nesta nestes nestas nesse nessa nesses nessas naquele naquela noutro noutra"
    ),
    PosTag.PRON_PERS: (
        "eu tu ele ela nós vós eles elas me te se lhe lhes vos mim ti si "
        "comigo contigo consigo conosco connosco você vocês"
    ),
    PosTag.PRP: (
        "de em para com por sem sob sobre entre até após ante contra desde perante "
        "durante mediante conforme do da dos das no na nos nas ao aos à às pelo pela "
        "pelos pelas num numa nuns numas dum duma duns dumas"
    ),
    PosTag.ADV: (
        "já não muito pouco mais menos bem mal ainda também sempre nunca aqui ali lá cá "
        "hoje ontem amanhã depois antes agora então assim só apenas talvez quase tão "
        "onde logo cedo tarde sim jamais aliás"
    ),
    PosTag.CONJ: "e ou mas porém contudo todavia que se porque pois nem embora enquanto portanto como quando",
    PosTag.NUM: "dois duas três quatro cinco seis sete oito nove dez onze doze vinte trinta cem cento mil",
}

CLOSED_CLASS: dict[str, PosTag] = {}
for _tag, _words in _CLOSED_CLASS.items():
    for _w in _words.split():
        CLOSED_CLASS.setdefault(_w, _tag)

# (suffix, tag), checked in order
SUFFIX_RULES: tuple[tuple[str, PosTag], ...] = (
    ("mente", PosTag.ADV),
    ("ções", PosTag.N),
    ("ção", PosTag.N),
    ("dades", PosTag.N),
    ("dade", PosTag.N),
    ("mentos", PosTag.N),
    ("mento", PosTag.N),
    ("ndo", PosTag.V_PCP),
    ("amos", PosTag.V_FI),
    ("emos", PosTag.V_FI),
    ("ou", PosTag.V_FI),
    ("am", PosTag.V_FI),
)


@lru_cache(maxsize=1)
def _shipped_lexicon() -> dict[str, PosTag]:
    text = resources.files("pampo").joinpath("data", "lexicon_pt.tsv").read_text(encoding="utf-8")
    lexicon = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        word, tag = line.split("\t")
        lexicon[word] = parse_tag(tag, strict=True)
    return lexicon


class BuiltinTagger(TagProvider):
    """Deterministic lexicon/suffix tagger.

    Precedence per word token: closed-class lexicon (case-insensitive), open
    lexicon (exact form), capitalized non-initial word -> ``prop``,
    capitalized sentence-initial word -> lexicon of its lowercase form or
    ``prop``, suffix rules, then ``n``. Numbers are ``num`` and punctuation
    ``punc``.
    """

    name = "builtin"

    def __init__(self, lexicon: dict[str, PosTag] | None = None):
        self.lexicon = dict(_shipped_lexicon() if lexicon is None else lexicon)

    def tag_word(self, surface: str, initial: bool, capitalized: bool) -> PosTag:
        lower = surface.lower()
        tag = CLOSED_CLASS.get(lower)
        if tag is not None:
            return tag
        tag = self.lexicon.get(surface)
        if tag is not None:
            return tag
        if capitalized:
            if initial:
                return self.lexicon.get(lower, PosTag.PROP)
            return PosTag.PROP
        for suffix, tag in SUFFIX_RULES:
            if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
                return tag
        return PosTag.N

    def tag_sentence(self, sentence: Sentence) -> list[PosTag]:
        tags = []
        seen_word = False
        for token in sentence.tokens:
            if token.kind is TokenKind.NUMBER:
                tags.append(PosTag.NUM)
            elif token.kind is TokenKind.PUNCTUATION:
                tags.append(PosTag.PUNC)
            else:
                tags.append(self.tag_word(token.surface, not seen_word, token.is_capitalized))
                seen_word = True
        return tags


def builtin_tagger() -> BuiltinTagger:
    return BuiltinTagger()


# -- pre-tagged input --------------------------------------------------------

_DOC_HEADER = re.compile(r"#\s*doc:\s*(.*\S)\s*$")


class PretaggedProvider(TagProvider):
    """Replay ``surface<TAB>tag`` files aligned with this package's tokenizer."""

    def __init__(self, documents: dict[str, list[list[tuple[str, PosTag]]]], name: str = "pretagged"):
        self.documents = documents
        self.name = name

    @classmethod
    def parse(cls, lines: Iterable[str], name: str = "pretagged") -> "PretaggedProvider":
        documents: dict[str, list[list[tuple[str, PosTag]]]] = {}
        doc: list[list[tuple[str, PosTag]]] | None = None
        current: list[tuple[str, PosTag]] = []
        for lineno, raw in enumerate(lines, 1):
            line = raw.rstrip("\r\n")
            header = _DOC_HEADER.match(line)
            if header:
                if doc is not None and current:
                    doc.append(current)
                current = []
                doc = documents.setdefault(header.group(1), [])
                continue
            if not line.strip():
                if doc is not None and current:
                    doc.append(current)
                current = []
                continue
            if "\t" not in line:
                if line.startswith("#"):
                    continue
                raise ValueError(f"{name}:{lineno}: expected 'surface<TAB>tag'")
            if doc is None:
                raise ValueError(f"{name}:{lineno}: token before any '# doc:' header")
            surface, tag = line.split("\t", 1)
            current.append((surface, parse_tag(tag)))
        if doc is not None and current:
            doc.append(current)
        return cls(documents, name)

    def tag_sentence(self, sentence: Sentence) -> list[PosTag]:
        doc = self.documents.get(sentence.doc_id)
        if doc is None:
            raise TaggingError(self.name, f"no tags for document {sentence.doc_id!r}")
        if sentence.index >= len(doc):
            raise AlignmentError(
                self.name, sentence.doc_id, 0,
                f"sentence {sentence.index} missing ({len(doc)} sentences tagged)",
            )
        tagged = doc[sentence.index]
        for i, token in enumerate(sentence.tokens):
            if i >= len(tagged):
                raise AlignmentError(
                    self.name, sentence.doc_id, i,
                    f"sentence {sentence.index} has {len(sentence.tokens)} tokens, {len(tagged)} tags",
                )
            if tagged[i][0] != token.surface:
                raise AlignmentError(
                    self.name, sentence.doc_id, i,
                    f"expected {token.surface!r}, file has {tagged[i][0]!r}",
                )
        if len(tagged) != len(sentence.tokens):
            raise AlignmentError(
                self.name, sentence.doc_id, len(sentence.tokens),
                f"sentence {sentence.index} has {len(sentence.tokens)} tokens, {len(tagged)} tags",
            )
        return [tag for _, tag in tagged]


def pretagged_provider(path: str | Path) -> PretaggedProvider:
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return PretaggedProvider.parse(fh, name=f"pretagged:{path.name}")


def write_pretagged(documents: Sequence[Document], provider: TagProvider, out: TextIO) -> None:
    """Dump ``provider``'s tags for ``documents`` in the pre-tagged format."""
    for doc in documents:
        out.write(f"# doc: {doc.id}\n")
        for sentence in doc.sentences:
            for token, tag in zip(sentence.tokens, provider.tag_sentence(sentence)):
                out.write(f"{token.surface}\t{tag.value}\n")
            out.write("\n")
