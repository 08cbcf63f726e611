"""PAMPO: named entity extraction for Portuguese by pattern matching and POS tagging.

Extraction runs in two phases. :func:`generate_candidates` matches a base
of term patterns over each sentence; :func:`select_entities` tags the
candidates and clips or prunes them with tag- and term-level rules.
:func:`extract` chains both. The :mod:`pampo.evaluation` and
:mod:`pampo.significance` modules score extractions and compare
extractors.
"""

from .candidates import CandidateEntity, generate_candidates
from .corpus import corpus_stats, frequency_report, load_corpus, load_gold, load_mentions
from .evaluation import (
    EntityType,
    EvalReport,
    GoldAnnotation,
    MatchCredit,
    Mention,
    Mode,
    compute_metrics,
    evaluate,
    filter_gold_types,
    match_occurrences,
    match_unique,
    per_type_recall,
)
from .patterns import PatternBases, default_bases, dump_pattern_bases, load_pattern_bases
from .selection import NamedEntity, extract, select_entities
from .significance import DiffStats, diff_stats, normal_cdf, ztest_mean_greater
from .tagging import TagProvider, builtin_tagger, pretagged_provider, tag_candidate
from .tags import PosTag
from .text import Document, Sentence, Token, segment, split_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "CandidateEntity", "DiffStats", "Document", "EntityType", "EvalReport",
    "GoldAnnotation", "MatchCredit", "Mention", "Mode", "NamedEntity",
    "PatternBases", "PosTag", "Sentence", "TagProvider", "Token",
    "builtin_tagger", "compute_metrics", "corpus_stats", "default_bases",
    "diff_stats", "dump_pattern_bases", "evaluate", "extract",
    "filter_gold_types", "frequency_report", "generate_candidates",
    "load_corpus", "load_gold", "load_mentions", "load_pattern_bases",
    "match_occurrences", "match_unique", "normal_cdf", "per_type_recall",
    "pretagged_provider", "segment", "select_entities", "split_sentences",
    "tag_candidate", "tokenize", "ztest_mean_greater",
]
