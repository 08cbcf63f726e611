"""Corpus statistics, candidate frequencies, and the same through the CLI.

Run: python demos/07_corpus.py
"""

import subprocess
import sys

from _paths import FIXTURES

from pampo import builtin_tagger, default_bases, generate_candidates, select_entities
from pampo.corpus import corpus_stats, frequency_report, load_corpus, load_gold

docs = load_corpus(FIXTURES)
gold = load_gold(FIXTURES / "sports_news.gold.jsonl", docs)
for key, value in corpus_stats(docs, gold).rows():
    print(f"{key:<16} {value}")

# How often each candidate surface appears and how often it survives phase 2.
bases, tagger = default_bases(), builtin_tagger()
cands = [c for d in docs for c in generate_candidates(d, bases)]
ents = select_entities(cands, bases, tagger)
print(f"\n{'surface':<28} cand  sel  kept")
for row in frequency_report(cands, ents, min_count=2):
    print(f"{row.surface:<28} {row.candidates:>4} {row.selected:>4}  {'+' if row.kept else '-'}")

print("\n$ pampo stats <fixtures> --gold sports_news.gold.jsonl --format tsv")
cmd = [sys.executable, "-m", "pampo", "stats", str(FIXTURES), "--gold", str(FIXTURES / "sports_news.gold.jsonl"),
       "--format", "tsv"]
print(subprocess.run(cmd, capture_output=True, text=True, check=True).stdout)
