"""Ranked frequency dictionary, rank/coverage tables and presentation formats."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DictionaryError
from .lemma import LemmaKey
from .statistics import format_decimal

DICT_HEADER = "#lexfreq-dict v1"
PLOT_HEADER = "#lexfreq-plot v1"

FREQUENCY_ALPHABETIC = "frequency-alphabetic"
ALPHABETIC_FREQUENCY = "alphabetic-frequency"

# rank rows printed in the novel's rank/coverage table
STANDARD_RANKS = (1, 5, 10, 25, 50, 75, 100, 200, 300, 400, 500, 600, 750, 1000, 1500, 2000, 3000, 4000, 5000, 6000)

COMPONENT_DASH = "—"

RANKLESS_MODES = ("keep", "skip", "fold")


@dataclass(frozen=True)
class DictionaryEntry:
    rank: int | None
    lemma: LemmaKey
    components: dict
    total: int
    rel_freq_pct: Fraction
    coverage_pct: Fraction

    @property
    def composite(self) -> bool:
        return len(self.components) > 1

    def render_components(self) -> str:
        return "; ".join(f"{c}{COMPONENT_DASH}{n}" for c, n in self.components.items())


@dataclass(frozen=True)
class CoveragePoint:
    rank: int
    coverage_pct: Fraction


def _row_order(record):
    headword, disamb = record.key.sort_key()
    return (-record.total, headword, disamb)


def build_dictionary(records, N: int, rankless: str = "keep") -> list[DictionaryEntry]:
    """Sort records by descending frequency and attach ranks and coverage.

    Ties break on headword code points.  Rankless (particle) rows:

    - ``"keep"``: stay in place without a rank and add to the running coverage;
    - ``"skip"``: stay in place and in N but do not add to the coverage, so the
      last row ends short of 100 by their share;
    - ``"fold"``: are dropped and N shrinks by their mass.
    """
    if rankless not in RANKLESS_MODES:
        raise ValueError(f"rankless must be one of {RANKLESS_MODES}, got {rankless!r}")
    records = list(records)
    if not records:
        raise DictionaryError("cannot build a dictionary from no records")
    total = sum(r.total for r in records)
    if total != N:
        raise DictionaryError(f"record totals sum to {total}, expected N={N}")
    if rankless == "fold":
        records = [r for r in records if not r.key.is_rankless]
        N = sum(r.total for r in records)
        if N == 0:
            raise DictionaryError("no ranked records left after folding particles")

    entries = []
    running = 0
    rank = 0
    for r in sorted(records, key=_row_order):
        if not (rankless == "skip" and r.key.is_rankless):
            running += r.total
        row_rank = None
        if not r.key.is_rankless:
            rank += 1
            row_rank = rank
        entries.append(
            DictionaryEntry(
                rank=row_rank,
                lemma=r.key,
                components=dict(r.components),
                total=r.total,
                rel_freq_pct=Fraction(100 * r.total, N),
                coverage_pct=Fraction(100 * running, N),
            )
        )
    return entries


def max_rank(entries) -> int:
    return max((e.rank for e in entries if e.rank is not None), default=0)


def plot_data(entries) -> list[CoveragePoint]:
    """Coverage at every rank, for external plotting."""
    return [CoveragePoint(e.rank, e.coverage_pct) for e in entries if e.rank is not None]


def coverage_table(entries, ranks) -> list[CoveragePoint]:
    by_rank = {p.rank: p for p in plot_data(entries)}
    top = max_rank(entries)
    points = []
    for r in ranks:
        if r not in by_rank:
            raise DictionaryError(f"rank {r} out of range (max rank is {top})")
        points.append(by_rank[r])
    return points


def default_ranks(entries) -> list[int]:
    top = max_rank(entries)
    ranks = [r for r in STANDARD_RANKS if r < top]
    if top:
        ranks.append(top)
    return ranks


def _alphabetic(entries):
    return sorted(entries, key=lambda e: e.lemma.sort_key())


def emit(entries, mode: str = FREQUENCY_ALPHABETIC, decimal: str = ",") -> str:
    """Dictionary TSV in either presentation order."""
    if mode == FREQUENCY_ALPHABETIC:
        rows = list(entries)
    elif mode == ALPHABETIC_FREQUENCY:
        rows = _alphabetic(entries)
    else:
        raise ValueError(f"unknown dictionary mode {mode!r}")
    lines = [DICT_HEADER, "rank\tlemma\tcomponents\tabs_freq\trel_freq_pct\tcoverage_pct"]
    for e in rows:
        lines.append(
            "\t".join(
                (
                    "" if e.rank is None else str(e.rank),
                    e.lemma.label,
                    e.render_components() if e.composite else "",
                    str(e.total),
                    format_decimal(e.rel_freq_pct, 2, decimal),
                    format_decimal(e.coverage_pct, 2, decimal),
                )
            )
        )
    return "\n".join(lines) + "\n"


def emit_plot_data(entries, decimal: str = ".") -> str:
    lines = [PLOT_HEADER, "rank\tcoverage_pct"]
    lines += [f"{p.rank}\t{format_decimal(p.coverage_pct, 2, decimal)}" for p in plot_data(entries)]
    return "\n".join(lines) + "\n"


def format_top(entries, n: int, decimal: str = ",") -> str:
    """First ``n`` ranked rows laid out like a printed frequency list.

    Rankless rows falling inside the range are shown without rank or coverage.
    """
    lines = ["Rank\tLemma\tAbs.\tRel.,%\tCov.,%"]
    for e in entries:
        if e.rank is not None and e.rank > n:
            break
        lemma = e.render_components() if e.composite else e.lemma.label
        if e.composite and e.lemma.disambiguator:
            lemma += f" ({e.lemma.disambiguator})"
        rank = "" if e.rank is None else str(e.rank)
        cover = "" if e.rank is None else format_decimal(e.coverage_pct, 2, decimal)
        lines.append(f"{rank}\t{lemma}\t{e.total}\t{format_decimal(e.rel_freq_pct, 2, decimal)}\t{cover}")
    return "\n".join(lines) + "\n"
