"""POS tags for candidates: the builtin rule tagger versus pre-tagged input.

Run: python demos/03_tagging.py
"""

from _paths import FIXTURES

from pampo import builtin_tagger, default_bases, generate_candidates, pretagged_provider, tag_candidate
from pampo.corpus import read_document

doc = read_document(FIXTURES / "sports_news.txt")
bases = default_bases()
builtin = builtin_tagger()
pretagged = pretagged_provider(FIXTURES / "fixtures.tags")

# Candidates are tagged in sentence context, so the first word of a sentence
# and a capitalized word mid-sentence can get different tags.
for cand in generate_candidates(doc, bases)[:10]:
    sent = doc.sentences[cand.sentence_index]
    a = tag_candidate(builtin, sent, cand.token_span).tags
    b = tag_candidate(pretagged, sent, cand.token_span).tags
    mark = "" if a == b else "   <- differs"
    print(f"{cand.surface:<36} builtin={' '.join(map(str, a)):<18} pretagged={' '.join(map(str, b))}{mark}")
