"""Batch command line: ``pampo {extract,evaluate,compare,stats,freq}``.

Exit codes: 0 success, 1 configuration or load error, 2 partial failure
(unreadable corpus files, gold or dumps naming unknown documents).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Sequence, TextIO

from .candidates import CandidateEntity, generate_candidates
from .corpus import corpus_stats, frequency_report, load_corpus, load_gold, load_mentions, write_csv
from .evaluation import EntityType, Mode, doc_metric, evaluate, filter_gold_types
from .patterns import PatternBases, PatternFileError, default_bases, load_pattern_bases
from .selection import NamedEntity, select_entities
from .significance import diff_stats, ztest_mean_greater
from .tagging import TagProvider, TaggingError, builtin_tagger, pretagged_provider
from .text import Document

logger = logging.getLogger("pampo")

METRICS = ("recall", "precision", "f1")


class UsageError(Exception):
    """Bad configuration or unreadable input (exit code 1)."""


class PartialFailure(Exception):
    """Some inputs failed or do not line up (exit code 2)."""


@dataclass
class RunConfig:
    patterns: Path | None = None
    tagger: str = "builtin"
    mode: Mode = Mode.UNIQUE
    exclude_types: frozenset[EntityType] = field(default_factory=frozenset)
    format: str = "jsonl"
    min_count: int = 1
    workers: int = 1

    def bases(self) -> PatternBases:
        if self.patterns is None:
            return default_bases()
        try:
            return load_pattern_bases(self.patterns)
        except FileNotFoundError:
            raise UsageError(f"pattern file not found: {self.patterns}") from None
        except PatternFileError as exc:
            raise UsageError(f"pattern file error: {exc}") from None

    def provider(self) -> TagProvider:
        if self.tagger == "builtin":
            return builtin_tagger()
        kind, sep, path = self.tagger.partition("=")
        if kind != "pretagged" or not sep or not path:
            raise UsageError(f"--tagger must be 'builtin' or 'pretagged=PATH', got {self.tagger!r}")
        if not Path(path).is_file():
            raise UsageError(f"pre-tagged file not found: {path}")
        try:
            return pretagged_provider(path)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


# -- pipeline ------------------------------------------------------------------


def _process(doc: Document, bases: PatternBases, provider: TagProvider):
    candidates = generate_candidates(doc, bases)
    return candidates, select_entities(candidates, bases, provider)


def run_pipeline(
    docs: Sequence[Document],
    bases: PatternBases,
    provider: TagProvider,
    workers: int = 1,
) -> list[tuple[list[CandidateEntity], list[NamedEntity]]]:
    """Candidates and entities per document, in the order of ``docs``."""
    work = partial(_process, bases=bases, provider=provider)
    if workers <= 1 or len(docs) < 2:
        return [work(d) for d in docs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(work, docs, chunksize=max(1, len(docs) // (4 * workers))))


def _load_docs(corpus: str) -> list[Document]:
    failures: list[tuple[str, str]] = []
    try:
        docs = load_corpus(corpus, failures)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    if failures:
        for doc_id, msg in failures:
            print(f"pampo: cannot read {doc_id}: {msg}", file=sys.stderr)
        raise PartialFailure(
            "failed files: " + ", ".join(d for d, _ in failures),
            docs,
        )
    return docs


def _extract_all(docs, config: RunConfig):
    try:
        return run_pipeline(docs, config.bases(), config.provider(), config.workers)
    except TaggingError as exc:
        raise UsageError(str(exc)) from None


def _open_out(path: str | None) -> TextIO:
    if path is None:
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="\n")


def _load_gold(path: str, docs=None):
    try:
        return load_gold(path, docs)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None


# -- commands --------------------------------------------------------------------


def cmd_extract(args, config: RunConfig) -> int:
    status = 0
    try:
        docs = _load_docs(args.corpus)
    except PartialFailure as exc:
        print(f"pampo: {exc.args[0]}", file=sys.stderr)
        docs, status = exc.args[1], 2
    results = _extract_all(docs, config)
    out = _open_out(args.out)
    try:
        records = [e.to_json() for _, entities in results for e in entities]
        if config.format == "jsonl":
            for rec in records:
                out.write(json.dumps(rec, ensure_ascii=False) + "\n")
        else:
            header = ["doc", "surface", "start", "end", "sentence"]
            rows = [[r[k] for k in header] for r in records]
            if config.format == "csv":
                write_csv(rows, header, out)
            else:
                out.write("\t".join(header) + "\n")
                for row in rows:
                    out.write("\t".join(str(v) for v in row) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return status


def _check_gold_docs(gold, doc_ids, what="gold") -> None:
    dangling = sorted({g.doc_id for g in gold} - set(doc_ids))
    if dangling:
        raise PartialFailure(f"{what} refers to unknown documents: {', '.join(dangling)}")


def cmd_evaluate(args, config: RunConfig) -> int:
    docs = _load_docs(args.corpus)
    gold = filter_gold_types(_load_gold(args.gold, docs), config.exclude_types)
    doc_ids = [d.id for d in docs]
    _check_gold_docs(gold, doc_ids)
    if args.extracted:
        try:
            extracted = load_mentions(args.extracted)
        except (OSError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        _check_gold_docs(extracted, doc_ids, "extractor output")
    else:
        extracted = [e for _, entities in _extract_all(docs, config) for e in entities]
    try:
        report = evaluate(extracted, gold, config.mode, doc_ids)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    lines = [
        f"mode       {report.mode.value}",
        f"documents  {len(report.per_document)}",
        f"gold       {report.gold_count}",
        f"extracted  {report.extracted_count}",
        f"credit     {float(report.credit_sum):.3f}",
        f"recall     {report.recall:.3f}",
        f"precision  {report.precision:.3f}",
        f"f1         {report.f1:.3f}",
    ]
    for metric in METRICS:
        mean, sd = report.macro(metric)
        lines.append(f"mean {metric:<10} {mean:.3f} ({sd:.3f})")
    if report.per_type_recall:
        lines.append("recall by type")
        lines += [f"  {t.value:<5} {r:.3f}" for t, r in report.per_type_recall.items()]
    for flag in report.flags:
        lines.append(f"note: {flag}")
    print("\n".join(lines))

    if args.out:
        rows = [
            [d.doc_id, d.gold_count, d.extracted_count, float(d.credit), d.recall, d.precision, d.f1]
            for d in report.per_document
        ]
        with _open_out(args.out) as fh:
            write_csv(rows, ["doc", "gold", "extracted", "credit", "recall", "precision", "f1"], fh)
    return 0


def cmd_compare(args, config: RunConfig) -> int:
    gold = filter_gold_types(_load_gold(args.gold), config.exclude_types)
    try:
        ours, theirs = load_mentions(args.ours), load_mentions(args.theirs)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    doc_ids = sorted({g.doc_id for g in gold})
    for name, dump in (("ours", ours), ("theirs", theirs)):
        extra = sorted({m.doc_id for m in dump} - set(doc_ids))
        if extra:
            raise PartialFailure(f"{name} covers documents absent from gold: {', '.join(extra)}")
    try:
        rep_a = evaluate(ours, gold, config.mode, doc_ids)
        rep_b = evaluate(theirs, gold, config.mode, doc_ids)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    stats = {m: diff_stats(doc_metric(rep_a, m), doc_metric(rep_b, m)) for m in METRICS}
    rows = []
    print(f"{'metric':<10} {'diff>0':>7} {'diff=0':>7} {'diff<0':>7} {'mean':>7} {'sd':>7}")
    for m, st in stats.items():
        print(f"{m:<10} {st.count_positive:>7} {st.count_zero:>7} {st.count_negative:>7} {st.mean:>7.3f} {st.sd:>7.3f}")
        rows.append(["diff", m, "", st.count_positive, st.count_zero, st.count_negative, st.mean, st.sd, "", ""])
    if args.mu0:
        print(f"\n{'metric':<10} {'mu0':>7} {'z':>9} {'p':>11}")
        for m, st in stats.items():
            for mu0 in args.mu0:
                try:
                    z, p = ztest_mean_greater(st, mu0)
                except ValueError as exc:
                    print(f"pampo: z-test for {m} at mu0={mu0}: {exc}", file=sys.stderr)
                    print(f"{m:<10} {mu0:>7.3f} {'n/a':>9} {'n/a':>11}")
                    continue
                print(f"{m:<10} {mu0:>7.3f} {z:>9.3f} {p:>11.3e}")
                rows.append(["ztest", m, mu0, "", "", "", st.mean, st.sd, z, p])
    if args.out:
        with _open_out(args.out) as fh:
            write_csv(rows, ["kind", "metric", "mu0", "positive", "zero", "negative", "mean", "sd", "z", "p"], fh)
    return 0


def cmd_stats(args, config: RunConfig) -> int:
    docs = _load_docs(args.corpus)
    gold = _load_gold(args.gold, docs) if args.gold else []
    try:
        stats = corpus_stats(docs, gold)
    except ValueError as exc:
        raise PartialFailure(str(exc)) from None
    if config.format == "csv":
        print(write_csv(stats.rows(), ["statistic", "value"]), end="")
    else:
        for key, value in stats.rows():
            print(f"{key:<14} {value}")
    return 0


def cmd_freq(args, config: RunConfig) -> int:
    docs = _load_docs(args.corpus)
    results = _extract_all(docs, config)
    candidates = [c for cands, _ in results for c in cands]
    entities = [e for _, ents in results for e in ents]
    rows = frequency_report(candidates, entities, config.min_count)
    out = _open_out(args.out)
    try:
        write_csv(
            [[r.surface, r.candidates, r.selected, "+" if r.kept else "-"] for r in rows],
            ["surface", "candidates", "selected", "kept"],
            out,
        )
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# -- argument parsing --------------------------------------------------------------


def _types(value: str) -> frozenset[EntityType]:
    try:
        return frozenset(EntityType(v.strip().upper()) for v in value.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"types must be among PER,LOC,ORG,MISC: {value!r}") from None


def _floats(value: str) -> list[float]:
    try:
        return [float(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {value!r}") from None


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; 2 is reserved for partial failures here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--patterns", type=Path, default=os.environ.get("PAMPO_PATTERNS") or None,
                        help="pattern-base file (default: $PAMPO_PATTERNS or shipped bases)")
    common.add_argument("--tagger", default="builtin", help="builtin | pretagged=PATH")
    common.add_argument("--mode", default="unique", choices=["occurrence", "unique"])
    common.add_argument("--exclude-types", type=_types, default=frozenset(), metavar="LIST")
    common.add_argument("--format", default="jsonl", choices=["jsonl", "csv", "tsv"])
    common.add_argument("--min-count", type=int, default=1, metavar="N")
    common.add_argument("--mu0", type=_floats, default=[], metavar="LIST")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--workers", type=int, default=1, metavar="N")

    parser = _Parser(prog="pampo", description="Pattern matching + POS tagging NER for Portuguese.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("extract", parents=[common], help="extract named entities from a corpus")
    p.add_argument("corpus")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("evaluate", parents=[common], help="score extraction against gold annotations")
    p.add_argument("corpus")
    p.add_argument("gold")
    p.add_argument("--extracted", metavar="JSONL", help="score this extractor dump instead of running PAMPO")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", parents=[common], help="paired per-document comparison of two dumps")
    p.add_argument("ours")
    p.add_argument("theirs")
    p.add_argument("gold")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("stats", parents=[common], help="corpus statistics")
    p.add_argument("corpus")
    p.add_argument("--gold")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("freq", parents=[common], help="candidate vs selected frequency report (CSV)")
    p.add_argument("corpus")
    p.set_defaults(func=cmd_freq)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="pampo: %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    config = RunConfig(
        patterns=args.patterns,
        tagger=args.tagger,
        mode=Mode.parse(args.mode),
        exclude_types=args.exclude_types,
        format=args.format,
        min_count=args.min_count,
        workers=args.workers,
    )
    try:
        return args.func(args, config)
    except UsageError as exc:
        print(f"pampo: {exc}", file=sys.stderr)
        return 1
    except PartialFailure as exc:
        print(f"pampo: {exc.args[0]}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
