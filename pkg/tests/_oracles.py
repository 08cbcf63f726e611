"""Independent reference implementations used to check the library.

These are written from the contract, not from the library code: slow,
exhaustive and deliberately simple.
"""

from __future__ import annotations

import itertools
import re
import unicodedata
from fractions import Fraction
from pathlib import Path

from pampo.candidates import generate_candidates
from pampo.text import segment

CONNECTOR_WORDS = {"de", "da", "do", "das", "dos", "e"}

# -- candidate generation ------------------------------------------------------

_ELEMENT_SYMBOL = {"CAP": "C", "TRIGGER": "T", "CONNECTOR": "K"}


def pattern_regex(pattern_text: str) -> re.Pattern:
    """Translate a TPB line into a regex over one symbol per token."""
    out = []
    for tok in re.findall(r"[A-Z]+|\{\d+(?:,\d*)?\}|[?*+()|]", pattern_text):
        if tok in _ELEMENT_SYMBOL:
            out.append(_ELEMENT_SYMBOL[tok])
        elif tok == "(":
            out.append("(?:")
        else:
            out.append(tok)
    return re.compile("".join(out))


def token_symbol(surface: str, triggers: set[str], connectors: set[str]) -> str:
    if surface in connectors:
        return "K"
    letters = surface[2:] if surface[:2].lower() in ("d'", "d’") and len(surface) > 2 else surface
    if not letters or not letters[0].isalpha():
        return "X"
    if letters[0].isupper():
        return "C"
    if surface.lower() in triggers:
        return "T"
    return "X"


def brute_force_matches(symbols: str, regexes: list[re.Pattern]) -> set[tuple[int, int]]:
    """Every (first, last) inclusive span matching some pattern, connectors not at the edges."""
    found = set()
    for i in range(len(symbols)):
        for j in range(i + 1, len(symbols) + 1):
            if symbols[i] == "K" or symbols[j - 1] == "K":
                continue
            if any(rx.fullmatch(symbols[i:j]) for rx in regexes):
                found.add((i, j - 1))
    return found


DEFAULT_PATTERNS = Path(__file__).resolve().parents[1] / "src" / "pampo" / "data" / "default_patterns.txt"


def raw_tpb_lines(path=DEFAULT_PATTERNS):
    """TPB lines as written in the file, not as parsed by the library."""
    lines, inside = [], False
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line.startswith("["):
            inside = line == "[tpb]"
        elif inside and line and not line.startswith("#"):
            lines.append(line)
    return lines


def check_against_oracle(text, bases, regexes) -> int:
    """Assert library candidates equal the maximal oracle spans; return sentences checked."""
    doc = segment(text, "p")
    cands = generate_candidates(doc, bases)
    triggers, connectors = set(bases.triggers), set(bases.connectors)
    checked = 0
    for sent in doc.sentences:
        if len(sent.tokens) > 8:
            continue
        checked += 1
        symbols = "".join(token_symbol(t.surface, triggers, connectors) for t in sent.tokens)
        oracle = brute_force_matches(symbols, regexes)
        spans = [c.token_span for c in cands if c.sentence_index == sent.index]
        for span in spans:
            assert span in oracle, (text, span)
            assert not any(o != span and o[0] <= span[0] and span[1] <= o[1] for o in spans)
        for i, j in oracle:
            assert any(a <= i and j <= b for a, b in spans), (text, (i, j), spans)
    return checked


# -- scoring ------------------------------------------------------------------


def _norm(s: str) -> str:
    return unicodedata.normalize("NFC", " ".join(s.split()))


def _words(s: str) -> list[str]:
    return re.findall(r"\w+(?:[-'’]\w+)*|[^\w\s]", _norm(s))


def _content(words: list[str]) -> int:
    return sum(1 for w in words if w not in CONNECTOR_WORDS and re.match(r"\w", w))


def _contains(big: list[str], small: list[str]) -> bool:
    return any(big[i : i + len(small)] == small for i in range(len(big) - len(small) + 1))


def pair_credit(extracted: str, gold: str) -> Fraction:
    e, g = _words(extracted), _words(gold)
    if e == g:
        return Fraction(1)
    if not e or not _content(g):
        return Fraction(0)
    if _contains(g, e):
        return Fraction(_content(e), _content(g))
    if _contains(e, g):
        return Fraction(1)
    return Fraction(0)


def optimal_credit(extracted: list[str], gold: list[str]) -> Fraction:
    """Best total over every assignment of extracted items to gold (or nothing), cap 1 per gold."""
    ext = list(dict.fromkeys(_norm(x) for x in extracted))
    gld = list(dict.fromkeys(_norm(x) for x in gold))
    table = [[pair_credit(e, g) for g in gld] for e in ext]
    table = [row for row in table if any(row)]  # unmatched items cannot change the optimum
    best = Fraction(0)
    for choice in itertools.product(range(len(gld) + 1), repeat=len(table)):
        filled = [Fraction(0)] * len(gld)
        for i, j in enumerate(choice):
            if j < len(gld):
                filled[j] += table[i][j]
        best = max(best, sum((min(Fraction(1), f) for f in filled), Fraction(0)))
    return best


def unique_counts(extracted: list[str], gold: list[str]) -> tuple[int, int]:
    return len({_norm(x) for x in extracted}), len({_norm(x) for x in gold})


def mean_sd(values: list[float]) -> tuple[float, float]:
    """Two-pass textbook mean and sample standard deviation."""
    n = len(values)
    m = sum(values) / n
    var = sum((v - m) ** 2 for v in values) / (n - 1)
    return m, var ** 0.5
