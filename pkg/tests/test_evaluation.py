import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import optimal_credit
from _synth import random_scoring_fixture, synthetic_corpus
from conftest import FIXTURES
from pampo import default_bases, extract, builtin_tagger
from pampo.corpus import load_gold
from pampo.evaluation import (
    EntityType,
    GoldAnnotation,
    Mention,
    Mode,
    compute_metrics,
    evaluate,
    filter_gold_types,
    fractional_credit,
    match_occurrences,
    match_unique,
    per_type_recall,
)
from pampo.text import segment

ATLANTA = "Jogos Olímpicos de Atlanta 1996"


def gold(surface, doc="d", etype=EntityType.MISC, start=0, end=None):
    return GoldAnnotation(doc, start, start + len(surface) if end is None else end, surface, etype)


@pytest.mark.parametrize(
    "fragment, weight",
    [("Atlanta", Fraction(1, 4)), ("Atlanta 1996", Fraction(2, 4)), ("Jogos Olímpicos", Fraction(2, 4)),
     ("Jogos Olímpicos de Atlanta", Fraction(3, 4)), (ATLANTA, Fraction(1))],
)
def test_fragment_weights(fragment, weight):
    assert fractional_credit(fragment, ATLANTA) == weight
    (credit,) = match_unique([Mention("d", fragment)], [gold(ATLANTA)])
    assert credit.credit == weight


def test_split_totals_one():
    credits = match_unique([Mention("d", "Atlanta 1996"), Mention("d", "Jogos Olímpicos")], [gold(ATLANTA)])
    assert sum(c.credit for c in credits) == 1


def test_exact_and_unrelated():
    assert fractional_credit("Brasil", "Brasil") == 1
    assert fractional_credit("Brasil", "Suíça") == 0
    assert fractional_credit("Olímpicos de", ATLANTA) == Fraction(1, 4)
    assert fractional_credit("Lei Agnelo / Piva", "Lei Agnelo/Piva") == 1


def test_gold_inside_extraction_gets_full_credit():
    assert fractional_credit("presidente do COB", "COB") == 1


def test_unique_mode_dedupes_by_surface():
    ext = [Mention("d", "Brasil"), Mention("d", "Brasil"), Mention("d", " Brasil ")]
    report = evaluate(ext, [gold("Brasil"), gold("Brasil", start=10)], Mode.UNIQUE)
    assert (report.gold_count, report.extracted_count, report.credit_sum) == (1, 1, 1)


def test_each_extraction_credits_one_gold():
    credits = match_unique([Mention("d", "Silva")], [gold("Ana Silva"), gold("Rui Silva")])
    assert [c.credit for c in credits] == [Fraction(1, 2)]


def test_cap_per_gold():
    ext = [Mention("d", "Jogos Olímpicos de Atlanta"), Mention("d", "Atlanta 1996")]
    credits = match_unique(ext, [gold(ATLANTA)])
    assert sorted(c.credit for c in credits) == [Fraction(1, 4), Fraction(3, 4)]


# -- occurrence mode --------------------------------------------------------


def test_occurrence_credits():
    g = gold(ATLANTA, start=10)
    exact = Mention("d", ATLANTA, 10, 10 + len(ATLANTA))
    inside = Mention("d", "Atlanta", 29, 36)
    apart = Mention("d", "Brasil", 100, 106)
    assert [c.credit for c in match_occurrences([exact], [g])] == [1]
    assert [c.credit for c in match_occurrences([inside], [g])] == [Fraction(1, 2)]
    assert [c.credit for c in match_occurrences([apart], [g])] == [0]
    assert match_occurrences([apart], [g])[0].gold is None


def test_occurrence_needs_offsets():
    with pytest.raises(ValueError):
        match_occurrences([Mention("d", "Brasil")], [gold("Brasil")])


def test_occurrence_two_halves_fill_one_gold():
    g = gold("Lei Agnelo/Piva", start=0)
    credits = match_occurrences([Mention("d", "Lei Agnelo", 0, 10), Mention("d", "Piva", 11, 15)], [g])
    assert sum(c.credit for c in credits) == 1


# -- metrics ------------------------------------------------------------------


def test_phase_one_counts():
    r = compute_metrics(3205, 3836, 5089)
    assert (r.recall, r.precision, r.f1) == pytest.approx((0.84, 0.63, 0.72), abs=0.005)


def test_phase_two_counts():
    r = compute_metrics(2982, 3836, 3075)
    assert (r.recall, r.precision) == pytest.approx((0.78, 0.97), abs=0.005)
    # the published F1 for this row is 0.87; the harmonic mean of these
    # counts is 0.863 (0.865 even from the rounded 0.78/0.97)
    assert r.f1 == pytest.approx(2 * 2982 / (3836 + 3075))
    assert r.f1 == pytest.approx(0.863, abs=0.0005)


def test_perfect_and_zero_denominators():
    r = compute_metrics(5, 5, 5)
    assert (r.recall, r.precision, r.f1, r.flags) == (1, 1, 1, ())
    r = compute_metrics(0, 0, 0)
    assert (r.recall, r.precision, r.f1) == (0, 0, 0)
    assert set(r.flags) == {"recall_undefined", "precision_undefined"}


def test_metrics_from_credit_list():
    credits = match_unique([Mention("d", "Atlanta")], [gold(ATLANTA)])
    assert compute_metrics(credits, 1, 1).credit_sum == Fraction(1, 4)


# -- per type and type filters ------------------------------------------------------


def test_per_type_examples():
    assert per_type_recall([Mention("d", "Jorge Silva")], [gold("Jorge Silva", etype=EntityType.PER)]) == {
        EntityType.PER: 1.0
    }
    g = [gold("Ana", etype=EntityType.PER), gold("Rui", etype=EntityType.PER), gold("Porto", etype=EntityType.LOC)]
    assert per_type_recall([Mention("d", "Porto")], g) == {EntityType.PER: 0.0, EntityType.LOC: 1.0}


def test_per_type_matches_brute_force_tally():
    docs = synthetic_corpus(docs=10)
    bases, tagger = default_bases(), builtin_tagger()
    extracted, all_gold = [], []
    for d in docs:
        extracted += extract(segment(d.text, d.doc_id), bases, tagger)
        all_gold += d.gold
    result = per_type_recall(extracted, all_gold)
    for etype in EntityType:
        credit, count = Fraction(0), 0
        for d in docs:
            typed = [g.surface for g in d.gold if g.type is etype]
            if not typed:
                continue
            ext = [e.surface for e in extracted if e.doc_id == d.doc_id]
            credit += optimal_credit(ext, typed)
            count += len(set(typed))
        if count:
            assert result[etype] == pytest.approx(float(credit / count), abs=1e-12)
        else:
            assert etype not in result


def test_filter_types():
    g = [gold("Ana", etype=EntityType.PER), gold("Porto", etype=EntityType.LOC)]
    assert filter_gold_types(g, []) == g
    assert filter_gold_types(g, ["PER", EntityType.LOC]) == []
    report = evaluate([Mention("d", "Ana")], filter_gold_types(g, set(EntityType)))
    assert "recall_undefined" in report.flags


@pytest.fixture(scope="module")
def sports_run(sports_doc, bases, pretagged):
    return extract(sports_doc, bases, pretagged), load_gold(FIXTURES / "sports_news.gold.jsonl", [sports_doc])


def test_sports_unique_tally(sports_run):
    extracted, g = sports_run
    report = evaluate(extracted, g, Mode.UNIQUE)
    assert (report.gold_count, report.extracted_count, report.credit_sum) == (16, 18, 15)
    assert report.recall == pytest.approx(15 / 16)
    assert report.precision == pytest.approx(15 / 18)


def test_sports_occurrence_tally(sports_run):
    extracted, g = sports_run
    report = evaluate(extracted, g, Mode.OCCURRENCE)
    # 15 exact spans; halves: Atenas x2, Atlanta x2, Sydney, and Lei Agnelo + Piva on one gold
    assert (report.gold_count, report.extracted_count, report.credit_sum) == (21, 23, Fraction(37, 2))


def test_sports_without_misc(sports_run):
    extracted, g = sports_run
    report = evaluate(extracted, filter_gold_types(g, {"MISC"}), Mode.UNIQUE)
    assert (report.gold_count, report.credit_sum) == (11, 11)
    assert report.precision == pytest.approx(11 / 18)


def test_per_document_rows_and_macro():
    g = [gold("Ana", "a"), gold("Rui", "b")]
    report = evaluate([Mention("a", "Ana")], g, doc_ids=["a", "b", "c"])
    assert [d.doc_id for d in report.per_document] == ["a", "b", "c"]
    assert [d.recall for d in report.per_document] == [1.0, 0.0, 0.0]
    mean, _ = report.macro("recall")
    assert mean == 0.5  # "c" has no gold: recall undefined, left out


# -- properties ------------------------------------------------------------------

WORDS = ["Banco", "Nacional", "Porto", "Silva", "Costa", "Norte", "Grande", "1996"]


@st.composite
def split_case(draw):
    n = draw(st.integers(1, 6))
    words = draw(st.permutations(WORDS))[:n]
    toks = []
    for i, w in enumerate(words):
        if i and draw(st.booleans()):
            toks.append(draw(st.sampled_from(["de", "da", "e"])))
        toks.append(w)
    cuts = sorted(draw(st.sets(st.integers(1, len(toks) - 1), max_size=len(toks) - 1)) if len(toks) > 1 else [])
    bounds = [0, *cuts, len(toks)]
    pieces = [" ".join(toks[a:b]) for a, b in zip(bounds, bounds[1:])]
    return " ".join(toks), pieces


def _distractors():
    return [gold("Lisboa"), gold("Ana Maria")]


@settings(max_examples=300, deadline=None)
@given(split_case())
def test_split_equivalence(case):
    surface, pieces = case
    golds = [gold(surface), *_distractors()]
    whole = evaluate([Mention("d", surface)], golds)
    split = evaluate([Mention("d", p) for p in pieces], golds)
    assert whole.credit_sum == split.credit_sum == 1


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_cap_bounds_and_greedy_never_beats_optimal(seed):
    ext, g = random_scoring_fixture(random.Random(seed))
    credits = match_unique(ext, g)
    per_gold = {}
    for c in credits:
        assert 0 <= c.credit <= 1
        if c.gold is None:
            assert c.credit == 0
        else:
            per_gold[c.gold] = per_gold.get(c.gold, 0) + c.credit
    assert all(v <= 1 for v in per_gold.values())
    total = sum(c.credit for c in credits)
    assert total <= optimal_credit([e.surface for e in ext], [x.surface for x in g])
    report = evaluate(ext, g)
    assert 0 <= report.recall <= 1 and 0 <= report.precision <= 1 and 0 <= report.f1 <= 1
    assert report.credit_sum <= min(report.gold_count, report.extracted_count)


@given(st.integers(0, 50), st.integers(1, 50), st.integers(1, 50))
def test_f1_between_p_and_r(credit, n_gold, n_ext):
    credit = min(credit, n_gold, n_ext)
    r = compute_metrics(credit, n_gold, n_ext)
    if r.precision > 0 and r.recall > 0:
        assert min(r.precision, r.recall) - 1e-12 <= r.f1 <= max(r.precision, r.recall) + 1e-12
        assert r.f1 == pytest.approx(2 * r.precision * r.recall / (r.precision + r.recall))
    else:
        assert r.f1 == 0
