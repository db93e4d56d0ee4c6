"""
The lexical index battery
=========================

Compute richness, mean repetition, exclusiveness and concentration, first for
the sample text, then from published counts alone.
"""

from fractions import Fraction
from pathlib import Path

import lexfreq as lf
from lexfreq.statistics import format_decimal

DATA = Path(__file__).parent / "data"

analysis = lf.analyze(lf.read_annotated(DATA / "sample.txt", DATA / "sample.tsv"))
print(lf.format_stats(analysis.stats))
print(f"fallback lemmas: {analysis.fallback_count} of {analysis.stats.N}")

# Ratios are exact fractions, so richness * mean repetition is exactly one.
s = analysis.stats
print(s.richness * s.mean_repetition)

# Published counts for the novel: N = 44 840, V = 6486, V1 = 3363, V10 = 598,
# N10 = 32 516.  The indices follow directly.
N, V, V1, V10, N10 = 44840, 6486, 3363, 598, 32516
for name, value, places in [
    ("V/N", Fraction(V, N), 3),
    ("N/V", Fraction(N, V), 1),
    ("V1/N", Fraction(V1, N), 3),
    ("V1/V", Fraction(V1, V), 3),
    ("V10/V", Fraction(V10, V), 3),
    ("N10/N", Fraction(N10, N), 3),
]:
    print(f"{name:>6} = {format_decimal(value, places)}")
# N10/N prints 0,725; the published table has 0,752, a transposition.
