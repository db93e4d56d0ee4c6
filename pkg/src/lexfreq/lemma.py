"""Lemma engine: maps annotated tokens to dictionary entries.

No morphology happens here.  Inflectional reduction comes from the annotation
lemma or from the lookup table; the engine applies the merging policy on top:
detached reflexive particles, phonetic-variant groups, homonym separation by
sense tag, and the ``-но/-таки/-то`` particle rule.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .exceptions import RulesetError

RANKLESS_TAG = "част.-ся"
RULESET_HEADER = "#lexfreq-rules v1"


def fold(s: str) -> str:
    return s.upper()


@dataclass(frozen=True)
class LemmaKey:
    headword: str
    disambiguator: str | None = None

    def __post_init__(self):
        if not self.headword:
            raise ValueError("headword must be non-empty")

    @property
    def is_rankless(self) -> bool:
        return self.disambiguator == RANKLESS_TAG

    @property
    def label(self) -> str:
        if self.is_rankless:
            return f"-{self.headword}"
        if self.disambiguator:
            return f"{self.headword}({self.disambiguator})"
        return self.headword

    def sort_key(self) -> tuple[str, str]:
        return (self.headword, self.disambiguator or "")


@dataclass(frozen=True)
class VariantGroup:
    canonical: str
    members: tuple[str, ...]

    def __post_init__(self):
        members = tuple(self.members)
        if self.canonical not in members:
            members = (self.canonical,) + members
        object.__setattr__(self, "members", members)
        if len(members) < 2:
            raise RulesetError(f"variant group {self.canonical!r} needs at least two members")
        if len(set(members)) != len(members):
            raise RulesetError(f"variant group {self.canonical!r} repeats a member")


@dataclass(frozen=True)
class LemmaOccurrence:
    key: LemmaKey
    component: str
    token_index: int
    fallback: bool = False


@dataclass
class FrequencyRecord:
    key: LemmaKey
    total: int
    components: dict[str, int] = field(default_factory=dict)


# (surface, pos, sense); pos and sense may be None as wildcards
LookupKey = tuple[str, "str | None", "str | None"]


@dataclass(frozen=True)
class LemmaRuleSet:
    variant_groups: tuple[VariantGroup, ...] = ()
    rankless_particles: tuple[str, ...] = ()
    strip_particles: tuple[str, ...] = ()
    nomerge: tuple[tuple[str, ...], ...] = ()
    lookup: Mapping[LookupKey, LemmaKey] = field(default_factory=dict)
    inflectable_pos: frozenset[str] = frozenset()

    def __post_init__(self):
        canonical_of = {}
        for group in self.variant_groups:
            for member in group.members:
                if member in canonical_of:
                    raise RulesetError(
                        f"{member!r} belongs to both {canonical_of[member]!r} and {group.canonical!r}"
                    )
                canonical_of[member] = group.canonical
        for words in self.nomerge:
            groups = {canonical_of.get(w) for w in words}
            if len(words) > 1 and len(groups) == 1 and None not in groups:
                raise RulesetError(f"do-not-merge words {', '.join(words)} share a variant group")
        object.__setattr__(self, "_canonical_of", canonical_of)

    def canonical(self, headword: str) -> str | None:
        return self._canonical_of.get(headword)

    def find(self, surface: str, pos: str | None, sense: str | None) -> LemmaKey | None:
        """Most specific lookup entry for a folded surface."""
        for candidate in ((surface, pos, sense), (surface, pos, None), (surface, None, sense), (surface, None, None)):
            key = self.lookup.get(candidate)
            if key is not None:
                return key
        return None


def _variants(*spec: str) -> tuple[VariantGroup, ...]:
    groups = []
    for item in spec:
        members = tuple(item.split("/"))
        groups.append(VariantGroup(members[0], members))
    return tuple(groups)


def default_ruleset() -> LemmaRuleSet:
    """Built-in rules: euphonic variants, detached -СЯ/-СЬ, and the particle list."""
    groups = _variants(
        "І/Й",
        "В/У",
        "З/ІЗ/ЗІ/ЗО",
        "ЩОБИ/ЩОБ",
        "Ж/ЖЕ",
        "Б/БИ",
        "ЩЕ/ІЩЕ",
        "ВЖЕ/УЖЕ",
        "ВЕСЬ/УВЕСЬ/ВВЕСЬ",
        "ІТИ/ЙТИ",
        "ЛЕДВЕ/ЛЕДВО",
        "ТРОХИ/ТРОХА",
        "ВЛОЖИТИ/УЛОЖИТИ",
        "ВСЯКИЙ/УСЯКИЙ",
        "ВУЛИЦЯ/УЛИЦЯ",
        "ВУХО/УХО",
    )
    # suppletive comparatives reduce to the comparative degree
    lookup = {
        ("НАЙБІЛЬШИЙ", None, None): LemmaKey("БІЛЬШИЙ"),
        ("НАЙМЕНШИЙ", None, None): LemmaKey("МЕНШИЙ"),
        ("НАЙКРАЩИЙ", None, None): LemmaKey("КРАЩИЙ"),
        ("НАЙГІРШИЙ", None, None): LemmaKey("ГІРШИЙ"),
    }
    return LemmaRuleSet(
        variant_groups=groups,
        rankless_particles=("СЯ", "СЬ"),
        strip_particles=("-НО", "-ТАКИ", "-ТО"),
        nomerge=(("ВЛЮБЛЕНИЙ", "УЛЮБЛЕНИЙ"), ("ВКЛАД", "УКЛАД"), ("ВПАДАТИ", "УПАДАТИ")),
        lookup=lookup,
        inflectable_pos=frozenset(
            ("noun", "adj", "pron", "num", "verb", "participle", "ім.", "прикм.", "займ.", "числ.", "дієсл.", "дієприкм.")
        ),
    )


def lemmatize(token, rules: LemmaRuleSet) -> LemmaOccurrence:
    """Resolve one annotated token to a lemma occurrence.

    Order: rankless particle, annotated lemma, lookup table, particle
    stripping on inflectable tokens, then the uppercase surface as a flagged
    fallback.  A sense tag always becomes the disambiguator unless a lookup
    entry supplies its own.  Variant-group members are rewritten to the
    group's canonical headword.
    """
    folded = fold(token.surface)
    if folded in rules.rankless_particles:
        return LemmaOccurrence(LemmaKey(folded, RANKLESS_TAG), folded, token.index)

    pos = token.pos or None
    sense = token.sense or None
    disambiguator = sense
    fallback = False

    if token.lemma:
        headword = fold(token.lemma)
    else:
        found = rules.find(folded, pos, sense)
        if found is None and pos in rules.inflectable_pos:
            for particle in rules.strip_particles:
                particle = fold(particle)
                if folded.endswith(particle) and len(folded) > len(particle):
                    stem = folded[: -len(particle)]
                    found = rules.find(stem, pos, sense) or LemmaKey(stem)
                    break
        if found is not None:
            headword = found.headword
            disambiguator = found.disambiguator or sense
        else:
            headword = folded
            fallback = True

    canonical = rules.canonical(headword)
    if canonical is None:
        return LemmaOccurrence(LemmaKey(headword, disambiguator), headword, token.index, fallback)
    component = folded if rules.canonical(folded) == canonical else headword
    return LemmaOccurrence(LemmaKey(canonical, disambiguator), component, token.index, fallback)


def lemmatize_all(tokens, rules: LemmaRuleSet) -> list[LemmaOccurrence]:
    return [lemmatize(t, rules) for t in tokens]


def aggregate(occurrences) -> list[FrequencyRecord]:
    """One record per distinct key, ordered by key; components by count then name."""
    totals: Counter = Counter()
    parts: dict[LemmaKey, Counter] = {}
    for occ in occurrences:
        totals[occ.key] += 1
        parts.setdefault(occ.key, Counter())[occ.component] += 1
    records = []
    for key in sorted(totals, key=LemmaKey.sort_key):
        comps = sorted(parts[key].items(), key=lambda kv: (-kv[1], kv[0]))
        records.append(FrequencyRecord(key, totals[key], dict(comps)))
    return records


# ruleset files

_SECTIONS = ("variants", "rankless", "strip", "nomerge", "inflectable", "lookup")


def _opt(s: str) -> str | None:
    return s or None


def parse_ruleset(text: str, source: str = "<rules>") -> LemmaRuleSet:
    """Parse the sectioned TSV ruleset format (see ``dump_ruleset``)."""
    content: dict[str, list] = {name: [] for name in _SECTIONS}
    section = None
    for lineno, line in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        if line.startswith("[") and line.rstrip().endswith("]"):
            section = line.strip()[1:-1]
            if section not in content:
                raise RulesetError(f"{source}:{lineno}: unknown section [{section}]")
            continue
        if section is None:
            raise RulesetError(f"{source}:{lineno}: entry outside of a section")
        fields = line.split("\t")
        if section == "variants":
            if len(fields) != 2:
                raise RulesetError(f"{source}:{lineno}: expected canonical<TAB>members")
            members = tuple(m.strip() for m in fields[1].split(",") if m.strip())
            content[section].append(VariantGroup(fields[0].strip(), members))
        elif section == "nomerge":
            words = tuple(w.strip() for w in line.replace("\t", ",").split(",") if w.strip())
            content[section].append(words)
        elif section == "lookup":
            if len(fields) != 5:
                raise RulesetError(f"{source}:{lineno}: lookup rows need 5 columns, found {len(fields)}")
            surface, pos, sense, headword, disamb = fields
            if not surface or not headword:
                raise RulesetError(f"{source}:{lineno}: lookup rows need surface and headword")
            content[section].append(((fold(surface), _opt(pos), _opt(sense)), LemmaKey(fold(headword), _opt(disamb))))
        else:
            content[section].append(line.strip())
    return LemmaRuleSet(
        variant_groups=tuple(content["variants"]),
        rankless_particles=tuple(content["rankless"]),
        strip_particles=tuple(content["strip"]),
        nomerge=tuple(content["nomerge"]),
        lookup=dict(content["lookup"]),
        inflectable_pos=frozenset(content["inflectable"]),
    )


def dump_ruleset(rules: LemmaRuleSet) -> str:
    out = [RULESET_HEADER, "[variants]"]
    out += [f"{g.canonical}\t{','.join(g.members)}" for g in rules.variant_groups]
    out.append("[rankless]")
    out += list(rules.rankless_particles)
    out.append("[strip]")
    out += list(rules.strip_particles)
    out.append("[nomerge]")
    out += [",".join(words) for words in rules.nomerge]
    out.append("[inflectable]")
    out += sorted(rules.inflectable_pos)
    out.append("[lookup]")
    for (surface, pos, sense), key in rules.lookup.items():
        out.append("\t".join((surface, pos or "", sense or "", key.headword, key.disambiguator or "")))
    return "\n".join(out) + "\n"


def load_ruleset(path) -> LemmaRuleSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FileNotFoundError(f"ruleset file not found: {path}") from None
    return parse_ruleset(text, str(path))
