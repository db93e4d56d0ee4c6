from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lexfreq import (
    FrequencyRecord,
    LemmaKey,
    StatsError,
    compute_stats,
    format_stats,
    hapax_set,
    round_half_up,
    stats_tsv,
    threshold_mass,
)
from lexfreq.statistics import STAT_FIELDS, format_decimal


def records_from(freqs: dict) -> list:
    return [FrequencyRecord(LemmaKey(k), n, {k: n}) for k, n in freqs.items()]


def fake_records(spectrum: dict) -> list:
    """Records realizing a frequency spectrum {frequency: number of lemmas}."""
    out = []
    for freq, count in spectrum.items():
        out += [FrequencyRecord(LemmaKey(f"L{freq}_{i}"), freq, {}) for i in range(count)]
    return out


@pytest.mark.parametrize(
    "value, places, expected",
    [
        (Fraction(6486, 44840), 3, "0,145"),
        (Fraction(44840, 6486), 1, "6,9"),
        (Fraction(3363, 6486), 3, "0,519"),
        (Fraction(3363, 6486), 2, "0,52"),
        (Fraction(598, 6486), 3, "0,092"),
        (Fraction(5, 1000), 2, "0,01"),
        (Fraction(15, 1000), 2, "0,02"),
        (Fraction(-15, 1000), 2, "-0,02"),
        (Fraction(100), 2, "100,00"),
        (Fraction(7, 2), 0, "4"),
    ],
)
def test_format_decimal(value, places, expected):
    assert format_decimal(value, places) == expected


def test_round_half_up_ties():
    assert round_half_up(Fraction(1, 8), 2) == Fraction(13, 100)
    assert round_half_up(Fraction(1, 40), 2) == Fraction(3, 100)


def test_hapax_set():
    recs = records_from({"A": 1, "B": 2, "C": 1})
    assert hapax_set(recs) == [LemmaKey("A"), LemmaKey("C")]
    assert hapax_set(records_from({"A": 2, "B": 3})) == []


def test_threshold_mass():
    recs = records_from({"A": 12, "B": 3, "C": 10})
    expected = (sum(n for n in (12, 3, 10) if n >= 10), sum(1 for n in (12, 3, 10) if n >= 10))
    assert threshold_mass(recs, 10) == expected == (22, 2)
    assert threshold_mass(recs, 1) == (25, 3)
    with pytest.raises(StatsError):
        threshold_mass(recs, 0)


def test_novel_counts():
    # record list with the novel's published V, V1, V10 and N10
    recs = fake_records({1: 3363})
    recs += [FrequencyRecord(LemmaKey(f"M{i}"), 2, {}) for i in range(6486 - 3363 - 598)]
    heavy = [FrequencyRecord(LemmaKey(f"H{i}"), 10, {}) for i in range(598)]
    heavy[0] = FrequencyRecord(LemmaKey("H0"), 32516 - 10 * 597, {})
    recs += heavy
    rest = 44840 - sum(r.total for r in recs)
    # pad frequency-2..9 lemmas so totals reach N without touching V1/V10
    i = 0
    while rest > 0:
        bump = min(7, rest)
        r = recs[3363 + i]
        recs[3363 + i] = FrequencyRecord(r.key, r.total + bump, {})
        rest -= bump
        i += 1
    s = compute_stats(recs, 44840, 11505)
    assert (s.N, s.V, s.V1, s.V10, s.N10) == (44840, 6486, 3363, 598, 32516)
    printed = format_stats(s)
    for line in ("richness=0,145", "mean_repetition=6,9", "excl_text=0,075", "excl_dict=0,519",
                 "conc_text=0,725", "conc_dict=0,092"):
        assert line in printed


def test_degenerate_corpus():
    s = compute_stats(records_from({"A": 1}), 1, 1)
    assert s.richness == 1 and s.excl_dict == 1 and s.V10 == 0


def test_empty_corpus():
    with pytest.raises(StatsError, match="empty corpus"):
        compute_stats([], 0, 0)


def test_totals_must_match_n():
    with pytest.raises(StatsError):
        compute_stats(records_from({"A": 2}), 3, 1)


def test_threshold_parameter():
    s = compute_stats(records_from({"A": 5, "B": 1}), 6, 2, threshold=5)
    assert (s.N10, s.V10) == (5, 1)


def test_reports():
    s = compute_stats(records_from({"A": 3, "B": 1}), 4, 2)
    assert format_stats(s, ".").splitlines()[:3] == ["N=4", "V_forms=2", "V=2"]
    lines = stats_tsv(s).splitlines()
    assert lines[0] == "#lexfreq-stats v1"
    assert [l.split("\t")[0] for l in lines[1:]] == list(STAT_FIELDS)
    assert "mean_repetition\t2,0" in lines


spectra = st.dictionaries(st.integers(1, 40), st.integers(1, 30), min_size=1, max_size=8)


@given(spectra)
def test_spectrum_partition_and_monotonicity(spectrum):
    recs = fake_records(spectrum)
    V = len(recs)
    assert len(hapax_set(recs)) + sum(c for f, c in spectrum.items() if f >= 2) == V
    prev = (float("inf"), float("inf"))
    for t in range(1, 45):
        cur = threshold_mass(recs, t)
        assert cur[0] <= prev[0] and cur[1] <= prev[1]
        prev = cur
    N = sum(r.total for r in recs)
    s = compute_stats(recs, N, N)
    assert s.richness * s.mean_repetition == 1
    assert s.V1 <= s.V and s.V10 <= s.V and s.N10 <= s.N
    assert s.excl_text <= s.excl_dict


@given(st.integers(1, 9))
def test_all_unique(n):
    s = compute_stats(records_from({f"W{i}": 1 for i in range(n)}), n, n)
    assert s.V == s.V1 == s.N == n and s.richness == 1 and s.conc_text == 0
