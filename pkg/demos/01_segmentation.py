"""Sentence splitting and tokenization with character offsets.

Run: python demos/01_segmentation.py
"""

from pampo import segment

text = (
    "O Sr. Silva chegou ao Porto às 9h. Encontrou a D. Maria d'Alva e o "
    "ministro G. L. Costa (p. 12). Depois seguiram para São Paulo!"
)
doc = segment(text, "demo")

# Abbreviations such as "Sr.", "D.", "p." and initials do not end a sentence.
for sent in doc.sentences:
    print(f"sentence {sent.index} [{sent.start}:{sent.end}]: {text[sent.start:sent.end]!r}")

# Every token keeps its offsets into the original text and a coarse kind.
print()
for tok in doc.sentences[1].tokens:
    assert text[tok.start:tok.end] == tok.surface
    print(f"{tok.surface:>8}  {tok.start:>3}-{tok.end:<3} {tok.kind.value:<11} capitalized={tok.is_capitalized}")

print(f"\nword count: {doc.word_count()}")
