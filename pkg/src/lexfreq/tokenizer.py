"""Word tokenizer.

A word is a maximal run of letters in which an apostrophe or a hyphen counts
as a letter as long as it sits between two letters.  Everything else
(whitespace, punctuation, digits, en/em dashes) delimits words.
"""

from __future__ import annotations

from dataclasses import dataclass

APOSTROPHE = "'"
TYPOGRAPHIC_APOSTROPHE = "’"
HYPHEN = "-"
JOINERS = frozenset((APOSTROPHE, TYPOGRAPHIC_APOSTROPHE, HYPHEN))

TOKEN_DUMP_HEADER = "#lexfreq-tokens v1"


@dataclass(frozen=True)
class Token:
    surface: str
    index: int
    char_offset: int


def tokenize(corpus) -> list[Token]:
    """Split a RawCorpus (or a plain string) into word tokens.

    Case is preserved.  A typographic apostrophe inside a word is rewritten
    to U+0027 so both spelling conventions give the same surface.
    """
    text = getattr(corpus, "text", corpus)
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        if not text[i].isalpha():
            i += 1
            continue
        start = i
        while True:
            while i < n and text[i].isalpha():
                i += 1
            # a joiner survives only between two letters
            if i + 1 < n and text[i] in JOINERS and text[i + 1].isalpha():
                i += 1
                continue
            break
        surface = text[start:i].replace(TYPOGRAPHIC_APOSTROPHE, APOSTROPHE)
        tokens.append(Token(surface, len(tokens), start))
    return tokens


def count_tokens(tokens) -> int:
    """Corpus size N."""
    return len(tokens)


def dump_tokens(tokens) -> str:
    lines = [TOKEN_DUMP_HEADER]
    lines.extend(f"{t.index}\t{t.char_offset}\t{t.surface}" for t in tokens)
    return "\n".join(lines) + "\n"
