"""Two-phase extraction, with a trace of why each candidate survived or not.

Run: python demos/04_extraction.py
"""

from _paths import FIXTURES

from pampo import default_bases, extract, generate_candidates, pretagged_provider
from pampo.corpus import read_document
from pampo.selection import select_one

bases = default_bases()
tags = pretagged_provider(FIXTURES / "fixtures.tags")

book = read_document(FIXTURES / "book_paragraph.txt")
print("phase 1 candidates and phase 2 decisions (book paragraph):")
for cand in generate_candidates(book, bases):
    trace = select_one(cand, book.sentences[cand.sentence_index], bases, tags)
    kept = trace.entity.surface if trace.entity else "-"
    print(f"  {cand.surface:<28} -> {kept:<28} rules={','.join(trace.rules) or 'none'}")

sports = read_document(FIXTURES / "sports_news.txt")
print("\nentities in the sports article, in text order:")
for e in extract(sports, bases, tags):
    print(f"  {e.start:>5}-{e.end:<5} {e.surface}")
