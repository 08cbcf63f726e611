"""Pattern bases: the shipped defaults and a custom pattern file.

Run: python demos/02_patterns.py
"""

from pampo import default_bases, generate_candidates, segment
from pampo.patterns import PatternFileError, parse_pattern_bases

bases = default_bases()
print("TPB patterns:")
for p in bases.tpb:
    print("  ", p)
print(f"{len(bases.triggers)} triggers, connectors {sorted(bases.connectors)}")
print(f"{len(bases.cpb)} clipping, {len(bases.ppb)} pruning patterns, {len(bases.tppb.keys)} stop-terms")

# A custom file only lists what it changes; other sections keep their defaults.
# Bare lowercase words in a pattern are literals.
custom = parse_pattern_bases(
    """
[tpb]
TRIGGER CAP+
rua CAP
CAP (CONNECTOR CAP)*

[triggers]
treinador
""",
    "custom.txt",
)
doc = segment("O treinador Luís Costa mora na rua Augusta, perto da Casa da Música.", "d")
print("\ncustom candidates:", [c.surface for c in generate_candidates(doc, custom)])
print("default candidates:", [c.surface for c in generate_candidates(doc, bases)])

# Malformed files are reported with file name and line number.
try:
    parse_pattern_bases("[cpb]\nadverb : 1\n", "broken.txt")
except PatternFileError as exc:
    print("\nerror:", exc)
