from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pampo import default_bases, pretagged_provider  # noqa: E402
from pampo.corpus import read_document  # noqa: E402

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "pampo" / "data" / "fixtures"
PRETAGGED = FIXTURES / "fixtures.tags"

BOOK_CANDIDATES = [
    "Irmandade do Bairro Ut O",
    "Conhecemos",
    "Parlamento do G",
    "L",
    "K",
    "Jorge Silva",
    "Ian",
    "ministro Miguel Relvas",
]
BOOK_ENTITIES = [
    "Irmandade do Bairro Ut O",
    "Parlamento do G",
    "Jorge Silva",
    "Ian",
    "ministro Miguel Relvas",
]
SPORTS_ENTITIES = [
    "Brasil",
    "Jogos Olímpicos de Atenas",
    "Jogos Olímpicos de Atenas",
    "Troféu Brasil de Atletismo",
    "São Paulo",
    "Jogos Olímpicos de Atlanta",
    "COB",
    "Federação Internacional de Tênis",
    "Brasil",
    "Sydney",
    "Brasil",
    "Federação Internacional de Natação",
    "Lucerne",
    "Suíça",
    "Jogos Olímpicos de Atlanta",
    "Confederações Brasileiras Olímpicas",
    "COB",
    "Lei Agnelo",
    "Piva",
    "Vale",
    "Federações Internacionais",
    "presidente do COB",
    "Carlos Arthur Nuzman",
]


@pytest.fixture(scope="session")
def bases():
    return default_bases()


@pytest.fixture(scope="session")
def book_doc():
    return read_document(FIXTURES / "book_paragraph.txt")


@pytest.fixture(scope="session")
def sports_doc():
    return read_document(FIXTURES / "sports_news.txt")


@pytest.fixture(scope="session")
def pretagged():
    return pretagged_provider(PRETAGGED)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
