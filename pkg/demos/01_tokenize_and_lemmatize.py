"""
From raw text to lemma occurrences
==================================

Tokenize a short annotated text, merge its sidecar annotations, and look at
how the lemma engine resolves each token.
"""

from pathlib import Path

import lexfreq as lf

DATA = Path(__file__).parent / "data"

# Tokenize.  Apostrophes and hyphens stay inside words, dashes and digits split.
print([t.surface for t in lf.tokenize("Раз-у-раз пам’яти — 1897 р., боїть ся")])

# Load the sample text with its positional annotation sidecar.
tokens = lf.read_annotated(DATA / "sample.txt", DATA / "sample.tsv")
print(len(tokens), "tokens")

# Resolve every token with the built-in rules.  Variant forms (й, у, із, ...)
# land under one headword but keep their component, the detached particle
# "ся" becomes an unranked entry, and sense tags keep homonyms apart.
rules = lf.default_ruleset()
for token in tokens[:12]:
    occ = lf.lemmatize(token, rules)
    flag = " (fallback)" if occ.fallback else ""
    print(f"{token.surface:>12} -> {occ.key.label:<14} component={occ.component}{flag}")

# The same rules in the editable file format.
print(lf.dump_ruleset(rules)[:300])
