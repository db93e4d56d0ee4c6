"""Naive recount oracle and synthetic corpus generator.

The oracle works from the intended (headword, sense) label the generator
attached to every token and shares no code with lexfreq.
"""

from fractions import Fraction

import numpy as np

from lexfreq import AnnotatedToken

# (surface, lemma annotation, sense, intended headword, intended component)
VOCAB = [
    ("і", None, None, "І", "І"),
    ("й", None, None, "І", "Й"),
    ("в", None, None, "В", "В"),
    ("у", None, None, "В", "У"),
    ("із", "з", None, "З", "ІЗ"),
    ("зо", None, None, "З", "ЗО"),
    ("не", None, None, "НЕ", "НЕ"),
    ("він", None, None, "ВІН", "ВІН"),
    ("його", "він", None, "ВІН", "ВІН"),
    ("йому", "він", None, "ВІН", "ВІН"),
    ("Анеля", None, "ім'я", "АНЕЛЯ", "АНЕЛЯ"),
    ("Анелі", "Анеля", "ім'я", "АНЕЛЯ", "АНЕЛЯ"),
    ("знала", "знати", None, "ЗНАТИ", "ЗНАТИ"),
    ("знає", "знати", None, "ЗНАТИ", "ЗНАТИ"),
    ("рука", None, None, "РУКА", "РУКА"),
    ("руки", "рука", None, "РУКА", "РУКА"),
    ("увесь", "весь", None, "ВЕСЬ", "УВЕСЬ"),
    ("всього", "весь", None, "ВЕСЬ", "ВЕСЬ"),
    ("щоб", None, None, "ЩОБИ", "ЩОБ"),
    ("найбільший", None, None, "БІЛЬШИЙ", "БІЛЬШИЙ"),
    ("більша", "більший", None, "БІЛЬШИЙ", "БІЛЬШИЙ"),
]
RANKLESS = ("ся", None, None, "СЯ", "СЯ")
RANKLESS_TAG = "част.-ся"


def synthetic_corpus(rng: np.random.Generator, n_tokens: int, zipf: bool, rankless: bool = True):
    """Random annotated stream plus the intended key of every token.

    Besides the fixed vocabulary, fresh words ``слово<k>`` fill the tail so
    hapaxes and long ranks occur.  Returns (tokens, labels, components).
    """
    fixed = VOCAB + ([RANKLESS] if rankless else [])
    n_fresh = max(1, n_tokens // 2)
    size = len(fixed) + n_fresh
    if zipf:
        weights = 1.0 / np.arange(1, size + 1) ** rng.uniform(0.8, 1.4)
        order = rng.permutation(size)
        weights = weights[order]
    else:
        weights = np.ones(size)
    draws = rng.choice(size, size=n_tokens, p=weights / weights.sum())
    tokens, labels, comps = [], [], []
    for i, d in enumerate(draws):
        if d < len(fixed):
            surface, lemma, sense, head, comp = fixed[d]
        else:
            word = "слово" + "".join("абвгдеєжзи"[int(c)] for c in str(d))
            surface, lemma, sense, head, comp = word, None, None, word.upper(), word.upper()
        tokens.append(AnnotatedToken(surface, i, 0, None, lemma, sense))
        if (surface, lemma) == ("ся", None):
            labels.append(("-" + head, RANKLESS_TAG))
        else:
            labels.append((head, sense or ""))
        comps.append(comp)
    return tokens, labels, comps


def naive_dictionary(labels, comps):
    """Rows (rank, label, sense, total, components, rel, coverage) by brute force."""
    distinct = sorted(set(labels))
    totals = {key: 0 for key in distinct}
    parts = {key: {} for key in distinct}
    for key, comp in zip(labels, comps):
        totals[key] = totals[key] + 1
        parts[key][comp] = parts[key].get(comp, 0) + 1
    n = len(labels)

    def headword(key):
        return key[0][1:] if key[0].startswith("-") else key[0]

    # bucket by frequency, walk buckets from the top, alphabetical inside a bucket
    buckets = {}
    for key in distinct:
        buckets.setdefault(totals[key], []).append(key)
    ordered = []
    for freq in range(max(buckets), 0, -1):
        ordered += sorted(buckets.get(freq, []), key=lambda k: (headword(k), k[1]))
    rows, running, rank = [], 0, 0
    for key in ordered:
        running += totals[key]
        ranked = not key[0].startswith("-")
        if ranked:
            rank += 1
        rows.append(
            (
                rank if ranked else None,
                key[0],
                key[1],
                totals[key],
                parts[key],
                Fraction(100 * totals[key], n),
                Fraction(100 * running, n),
            )
        )
    return rows


def naive_stats(tokens, labels, threshold=10):
    counts = {}
    for key in labels:
        counts[key] = counts.get(key, 0) + 1
    n = len(labels)
    v = len(counts)
    v1 = len([k for k in counts if counts[k] == 1])
    heavy = [counts[k] for k in counts if counts[k] >= threshold]
    forms = set()
    for t in tokens:
        forms.add(t.surface.upper())
    return {
        "N": n,
        "V_forms": len(forms),
        "V": v,
        "V1": v1,
        "N10": sum(heavy),
        "V10": len(heavy),
        "richness": Fraction(v, n),
        "mean_repetition": Fraction(n, v),
        "excl_text": Fraction(v1, n),
        "excl_dict": Fraction(v1, v),
        "conc_text": Fraction(sum(heavy), n),
        "conc_dict": Fraction(len(heavy), v),
    }
