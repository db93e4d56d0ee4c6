"""Lexical-statistics indices computed from frequency records.

Ratios are exact ``Fraction`` values; rounding happens only when a report is
formatted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction

from .exceptions import StatsError
from .lemma import fold

STATS_HEADER = "#lexfreq-stats v1"

# printed precision per ratio field
DEFAULT_PRECISION = {
    "richness": 3,
    "mean_repetition": 1,
    "excl_text": 3,
    "excl_dict": 3,
    "conc_text": 3,
    "conc_dict": 3,
}


@dataclass(frozen=True)
class CorpusStats:
    N: int
    V_forms: int
    V: int
    V1: int
    N10: int
    V10: int
    richness: Fraction
    mean_repetition: Fraction
    excl_text: Fraction
    excl_dict: Fraction
    conc_text: Fraction
    conc_dict: Fraction

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


STAT_FIELDS = tuple(f.name for f in fields(CorpusStats))


def round_half_up(value, places: int) -> Fraction:
    """Round a rational to ``places`` decimals, ties away from zero."""
    value = Fraction(value)
    scale = 10**places
    sign = -1 if value < 0 else 1
    return sign * Fraction(math.floor(abs(value) * scale + Fraction(1, 2)), scale)


def format_decimal(value, places: int, decimal: str = ",") -> str:
    rounded = round_half_up(value, places)
    scaled = abs(rounded.numerator * 10**places // rounded.denominator)
    sign = "-" if rounded < 0 else ""
    whole, frac = divmod(scaled, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}{decimal}{frac:0{places}d}"


def count_wordforms(tokens) -> int:
    """Distinct case-folded surfaces (V_forms)."""
    return len({fold(t.surface) for t in tokens})


def hapax_set(records) -> list:
    """Keys of lemmas that occur exactly once."""
    return [r.key for r in records if r.total == 1]


def threshold_mass(records, t: int = 10) -> tuple[int, int]:
    """(tokens, types) carried by lemmas with frequency >= t."""
    if t < 1:
        raise StatsError(f"frequency threshold must be >= 1, got {t}")
    heavy = [r.total for r in records if r.total >= t]
    return sum(heavy), len(heavy)


def compute_stats(records, N: int, V_forms: int, threshold: int = 10) -> CorpusStats:
    if N <= 0:
        raise StatsError("empty corpus")
    total = sum(r.total for r in records)
    if total != N:
        raise StatsError(f"record totals sum to {total}, expected N={N}")
    V = len(records)
    V1 = len(hapax_set(records))
    N10, V10 = threshold_mass(records, threshold)
    return CorpusStats(
        N=N,
        V_forms=V_forms,
        V=V,
        V1=V1,
        N10=N10,
        V10=V10,
        richness=Fraction(V, N),
        mean_repetition=Fraction(N, V),
        excl_text=Fraction(V1, N),
        excl_dict=Fraction(V1, V),
        conc_text=Fraction(N10, N),
        conc_dict=Fraction(V10, V),
    )


def format_value(name: str, value, decimal: str = ",", precision: dict | None = None) -> str:
    if isinstance(value, int):
        return str(value)
    places = {**DEFAULT_PRECISION, **(precision or {})}[name]
    return format_decimal(value, places, decimal)


def format_stats(stats: CorpusStats, decimal: str = ",", precision: dict | None = None) -> str:
    """Flat ``key=value`` report block."""
    return "".join(
        f"{name}={format_value(name, value, decimal, precision)}\n" for name, value in stats.as_dict().items()
    )


def stats_tsv(stats: CorpusStats, decimal: str = ",", precision: dict | None = None) -> str:
    lines = [STATS_HEADER]
    lines += [f"{name}\t{format_value(name, value, decimal, precision)}" for name, value in stats.as_dict().items()]
    return "\n".join(lines) + "\n"
