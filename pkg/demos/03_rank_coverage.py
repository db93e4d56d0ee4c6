"""
Ranks and text coverage
=======================

Build the frequency dictionary, print it in both presentation orders, and
trace how much of the text the top ranks cover.
"""

from pathlib import Path

import lexfreq as lf

DATA = Path(__file__).parent / "data"

tokens = lf.read_annotated(DATA / "sample.txt", DATA / "sample.tsv")
analysis = lf.analyze(tokens)

print(lf.format_top(analysis.entries, 10))
print(lf.emit(analysis.entries, lf.ALPHABETIC_FREQUENCY)[:400])

for point in lf.coverage_table(analysis.entries, [1, 5, 10, 25]):
    print(point.rank, float(point.coverage_pct))

# The unranked -СЯ row can feed the running coverage ("keep"), stay in N but
# not in the coverage ("skip"), or be removed from the counts entirely ("fold").
for mode in ("keep", "skip", "fold"):
    entries = lf.analyze(tokens, rankless=mode).entries
    print(mode, [round(float(p.coverage_pct), 2) for p in lf.plot_data(entries)[:8]])

# Plot the full curve if matplotlib is around.
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    points = lf.plot_data(analysis.entries)
    plt.plot([p.rank for p in points], [float(p.coverage_pct) for p in points])
    plt.xlabel("rank")
    plt.ylabel("coverage, %")
    plt.savefig(Path(__file__).with_suffix(".png"))
