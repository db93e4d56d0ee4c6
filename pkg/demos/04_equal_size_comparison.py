"""
Comparing texts of unequal length
=================================

Vocabulary grows more slowly than text, so two texts are compared on equal
token prefixes.  Here two synthetic texts stand in for two novels.
"""

import random

import lexfreq as lf

rng = random.Random(1893)
words = [f"слово{chr(0x430 + i % 32)}{i // 32}" for i in range(3000)]
weights = [1 / (r + 1) for r in range(len(words))]


def text(n):
    return [lf.AnnotatedToken(w, i) for i, w in enumerate(rng.choices(words, weights, k=n))]


short, long = text(4484), text(9389)

report = lf.compare(short, long, labels=("short", "long"), include_full=True)
print(lf.report_tsv(report))

# The richness gap shrinks once the longer text is cut to the same size.
full = report.full["long"]
print("richness, long text at full length:", float(full.richness))
print("richness, long text truncated:     ", float(report.stats_b.richness))
