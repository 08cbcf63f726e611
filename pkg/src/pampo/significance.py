"""Paired per-document differences between two extractors and a one-sided z-test."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Mapping, Sequence

__all__ = ["DiffStats", "ZERO_TOLERANCE", "diff_stats", "normal_cdf", "normal_sf", "ztest_mean_greater"]

ZERO_TOLERANCE = 1e-12


@dataclass(frozen=True)
class DiffStats:
    doc_ids: tuple[str, ...]
    diffs: tuple[float, ...]
    count_positive: int
    count_zero: int
    count_negative: int
    mean: float
    sd: float

    @property
    def n(self) -> int:
        return len(self.diffs)


def diff_stats(metric_a: Mapping[str, float], metric_b: Mapping[str, float]) -> DiffStats:
    """Per-document ``a - b`` with sign counts, mean and sample (n-1) sd.

    Differences smaller than ``ZERO_TOLERANCE`` in magnitude count as zero.
    """
    if set(metric_a) != set(metric_b):
        only_a = sorted(set(metric_a) - set(metric_b))
        only_b = sorted(set(metric_b) - set(metric_a))
        raise ValueError(f"document sets differ: only in a {only_a}, only in b {only_b}")
    ids = tuple(sorted(metric_a))
    diffs = tuple(metric_a[d] - metric_b[d] for d in ids)
    pos = sum(1 for d in diffs if d > ZERO_TOLERANCE)
    neg = sum(1 for d in diffs if d < -ZERO_TOLERANCE)
    mean = statistics.fmean(diffs) if diffs else 0.0
    sd = statistics.stdev(diffs) if len(diffs) > 1 else 0.0
    return DiffStats(ids, diffs, pos, len(diffs) - pos - neg, neg, mean, sd)


def normal_cdf(z: float) -> float:
    """Standard normal CDF via ``math.erfc`` (double precision)."""
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


def normal_sf(z: float) -> float:
    """Upper tail ``1 - Phi(z)``, accurate for large ``z``."""
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def ztest_mean_greater(
    diffs: Sequence[float] | DiffStats | None = None,
    mu0: float = 0.0,
    *,
    mean: float | None = None,
    sd: float | None = None,
    n: int | None = None,
) -> tuple[float, float]:
    """One-sided z-test of H1: mean difference > ``mu0``.

    Pass the differences (or a :class:`DiffStats`), or the summary
    ``mean``/``sd``/``n`` directly. Returns ``(z, p_value)``.
    """
    if diffs is not None:
        if isinstance(diffs, DiffStats):
            mean, sd, n = diffs.mean, diffs.sd, diffs.n
        else:
            values = list(diffs)
            n = len(values)
            if n < 2:
                raise ValueError(f"z-test needs at least 2 differences, got {n}")
            mean, sd = statistics.fmean(values), statistics.stdev(values)
    if mean is None or sd is None or n is None:
        raise TypeError("give either diffs or mean, sd and n")
    if n < 2:
        raise ValueError(f"z-test needs at least 2 differences, got {n}")
    if not sd > 0:
        raise ValueError("z-test undefined: standard deviation is zero")
    z = (mean - mu0) / (sd / math.sqrt(n))
    return z, normal_sf(z)
