"""Tokens to dictionary and statistics in one call."""

from __future__ import annotations

from dataclasses import dataclass

from .dictionary import RANKLESS_MODES, DictionaryEntry, build_dictionary
from .exceptions import FallbackError, StatsError
from .lemma import FrequencyRecord, LemmaOccurrence, LemmaRuleSet, aggregate, default_ruleset, lemmatize
from .statistics import CorpusStats, compute_stats, count_wordforms


@dataclass
class Analysis:
    occurrences: list[LemmaOccurrence]
    records: list[FrequencyRecord]
    stats: CorpusStats
    entries: list[DictionaryEntry]

    @property
    def fallback_count(self) -> int:
        return sum(o.fallback for o in self.occurrences)

    @property
    def fallback_rate(self) -> float:
        return self.fallback_count / len(self.occurrences) if self.occurrences else 0.0


def analyze(
    tokens,
    rules: LemmaRuleSet | None = None,
    threshold: int = 10,
    rankless: str = "keep",
    strict: bool = False,
) -> Analysis:
    """Run lemmatization, aggregation, statistics and dictionary building.

    ``rankless="fold"`` removes detached-particle tokens before anything is
    counted, so N, V_forms and every index exclude them.  ``"skip"`` keeps
    them in every count but leaves them out of cumulative coverage.
    """
    if rankless not in RANKLESS_MODES:
        raise ValueError(f"rankless must be one of {RANKLESS_MODES}, got {rankless!r}")
    rules = rules if rules is not None else default_ruleset()
    tokens = list(tokens)
    occurrences = [lemmatize(t, rules) for t in tokens]
    if rankless == "fold":
        kept = [(t, o) for t, o in zip(tokens, occurrences) if not o.key.is_rankless]
        tokens = [t for t, _ in kept]
        occurrences = [o for _, o in kept]
    if strict:
        missing = [o for o in occurrences if o.fallback]
        if missing:
            first = tokens[occurrences.index(missing[0])]
            raise FallbackError(
                f"{len(missing)} token(s) have no lemma annotation or lookup entry; "
                f"first at index {first.index} ({first.surface!r})"
            )
    if not occurrences:
        raise StatsError("empty corpus")
    records = aggregate(occurrences)
    N = len(occurrences)
    stats = compute_stats(records, N, count_wordforms(tokens), threshold)
    entries = build_dictionary(records, N, "skip" if rankless == "skip" else "keep")
    return Analysis(occurrences, records, stats, entries)
