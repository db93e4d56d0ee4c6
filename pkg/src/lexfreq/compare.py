"""Equal-size corpus comparison by token-prefix truncation."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import StatsError
from .pipeline import analyze
from .statistics import STAT_FIELDS, CorpusStats, format_value

COMPARE_HEADER = "#lexfreq-compare v1"


@dataclass
class ComparisonReport:
    label_a: str
    label_b: str
    truncated_to: int
    stats_a: CorpusStats
    stats_b: CorpusStats
    deltas: dict
    # full-length stats of whichever corpus was truncated, when requested
    full: dict[str, CorpusStats] = field(default_factory=dict)


def truncate_prefix(tokens, n: int) -> list:
    """The first ``n`` tokens, in order."""
    tokens = list(tokens)
    if n < 0:
        raise ValueError(f"target size must be non-negative, got {n}")
    if n > len(tokens):
        raise StatsError(f"cannot truncate to {n} tokens: only {len(tokens)} available")
    return tokens[:n]


def compare(
    corpus_a,
    corpus_b,
    rules=None,
    labels: tuple[str, str] = ("A", "B"),
    threshold: int = 10,
    rankless: str = "keep",
    include_full: bool = False,
) -> ComparisonReport:
    """Evaluate both corpora at the shorter one's token count.

    Deltas are ``b - a`` per field.
    """
    corpus_a, corpus_b = list(corpus_a), list(corpus_b)
    if not corpus_a or not corpus_b:
        raise StatsError("empty corpus")
    n = min(len(corpus_a), len(corpus_b))
    stats_a = analyze(truncate_prefix(corpus_a, n), rules, threshold, rankless).stats
    stats_b = analyze(truncate_prefix(corpus_b, n), rules, threshold, rankless).stats
    deltas = {name: getattr(stats_b, name) - getattr(stats_a, name) for name in STAT_FIELDS}
    full = {}
    if include_full:
        for label, corpus in zip(labels, (corpus_a, corpus_b)):
            if len(corpus) > n:
                full[label] = analyze(corpus, rules, threshold, rankless).stats
    return ComparisonReport(labels[0], labels[1], n, stats_a, stats_b, deltas, full)


def report_tsv(report: ComparisonReport, decimal: str = ",", precision: dict | None = None) -> str:
    """One row per statistic; one column per corpus, then the delta."""
    n = report.truncated_to
    columns = [(f"{report.label_a} ({n})", report.stats_a), (f"{report.label_b} ({n})", report.stats_b)]
    columns += [(f"{label} (full)", stats) for label, stats in report.full.items()]
    lines = [COMPARE_HEADER, "\t".join(["field"] + [c for c, _ in columns] + ["delta"])]
    for name in STAT_FIELDS:
        cells = [format_value(name, getattr(stats, name), decimal, precision) for _, stats in columns]
        cells.append(format_value(name, report.deltas[name], decimal, precision))
        lines.append("\t".join([name] + cells))
    return "\n".join(lines) + "\n"
