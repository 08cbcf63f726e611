"""Scoring extractors against gold: PAMPO and three other tools on one article.

The other tools' outputs are surface-only dumps in demos/data.

Run: python demos/05_evaluation.py
"""

from _paths import DATA, FIXTURES

from pampo import default_bases, extract, pretagged_provider
from pampo.corpus import load_gold, load_mentions, read_document
from pampo.evaluation import evaluate, filter_gold_types, fractional_credit

doc = read_document(FIXTURES / "sports_news.txt")
gold = load_gold(FIXTURES / "sports_news.gold.jsonl", [doc])
systems = {"pampo": extract(doc, default_bases(), pretagged_provider(FIXTURES / "fixtures.tags"))}
for name in ("alchemy", "rembrandt", "zemanta"):
    systems[name] = load_mentions(DATA / f"{name}.jsonl")

# Partial matches earn the share of the gold entity's content words they cover.
atlanta = "Jogos Olímpicos de Atlanta 1996"
for fragment in ("Atlanta", "Jogos Olímpicos", "Jogos Olímpicos de Atlanta"):
    print(f"credit({fragment!r}) = {fractional_credit(fragment, atlanta)}")

for label, g in (("all types", gold), ("without MISC", filter_gold_types(gold, {"MISC"}))):
    print(f"\nunique surfaces, {label}:")
    print(f"  {'system':<10} {'gold':>4} {'ext':>4} {'credit':>7} {'R':>6} {'P':>6} {'F1':>6}")
    for name, ext in systems.items():
        r = evaluate(ext, g, "unique")
        print(f"  {name:<10} {r.gold_count:>4} {r.extracted_count:>4} {float(r.credit_sum):>7.2f} "
              f"{r.recall:>6.3f} {r.precision:>6.3f} {r.f1:>6.3f}")

# Occurrence mode needs character offsets, which only PAMPO's output has here.
r = evaluate(systems["pampo"], gold, "occurrence")
print(f"\npampo, every occurrence: credit {float(r.credit_sum)} of {r.gold_count} gold, "
      f"R {r.recall:.3f} P {r.precision:.3f} F1 {r.f1:.3f}")
print("per-type recall:", {str(t): round(v, 3) for t, v in r.per_type_recall.items()})
