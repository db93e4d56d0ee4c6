"""Corpus and annotation-sidecar ingestion."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from pathlib import Path

from .exceptions import AnnotationError, CorpusError
from .tokenizer import Token, tokenize

ANNOTATION_HEADER = "#lexfreq-ann v1"
ANNOTATION_COLUMNS = 5


@dataclass(frozen=True)
class RawCorpus:
    text: str
    source_id: str = ""


@dataclass(frozen=True)
class AnnotationRow:
    token_index: int
    surface: str
    pos: str | None = None
    lemma: str | None = None
    sense: str | None = None


@dataclass(frozen=True)
class AnnotatedToken:
    surface: str
    index: int = 0
    char_offset: int = 0
    pos: str | None = None
    lemma: str | None = None
    sense: str | None = None

    @property
    def annotated(self) -> bool:
        return self.pos is not None or self.lemma is not None or self.sense is not None


def decode_corpus(data: bytes, source_id: str = "", nfc: bool = False) -> RawCorpus:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise CorpusError(f"{source_id or 'corpus'}: malformed UTF-8 at byte offset {e.start}") from None
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    if nfc:
        text = unicodedata.normalize("NFC", text)
    return RawCorpus(text, source_id)


def load_corpus(path, nfc: bool = False) -> RawCorpus:
    """Read a UTF-8 corpus file.  Only line endings are unified unless ``nfc`` is set."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise FileNotFoundError(f"corpus file not found: {path}") from None
    return decode_corpus(data, str(path), nfc=nfc)


def _optional(field: str) -> str | None:
    return field if field else None


def parse_annotations(text: str, source: str = "<annotations>") -> list[AnnotationRow]:
    lines = text.replace("\r\n", "\n").split("\n")
    if not lines or lines[0].strip() != ANNOTATION_HEADER:
        raise AnnotationError(f"{source}: missing header line {ANNOTATION_HEADER!r}")
    rows: list[AnnotationRow] = []
    last = -1
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != ANNOTATION_COLUMNS:
            raise AnnotationError(
                f"{source}:{lineno}: expected {ANNOTATION_COLUMNS} columns, found {len(fields)}"
            )
        raw_index, surface, pos, lemma, sense = fields
        try:
            index = int(raw_index)
        except ValueError:
            raise AnnotationError(f"{source}:{lineno}: non-numeric token_index {raw_index!r}") from None
        if index < 0:
            raise AnnotationError(f"{source}:{lineno}: negative token_index {index}")
        if index <= last:
            raise AnnotationError(f"{source}:{lineno}: non-increasing index {index} after {last}")
        last = index
        rows.append(AnnotationRow(index, surface, _optional(pos), _optional(lemma), _optional(sense)))
    return rows


def load_annotations(path) -> list[AnnotationRow]:
    path = Path(path)
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise FileNotFoundError(f"annotation file not found: {path}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise AnnotationError(f"{path}: malformed UTF-8 at byte offset {e.start}") from None
    return parse_annotations(text, str(path))


def merge_annotations(tokens: list[Token], rows: list[AnnotationRow]) -> list[AnnotatedToken]:
    """Pair each token with its sidecar row; unannotated tokens get empty annotations."""
    by_index = {}
    for row in rows:
        if not 0 <= row.token_index < len(tokens):
            raise AnnotationError(
                f"annotation index {row.token_index} out of range (corpus has {len(tokens)} tokens)"
            )
        token = tokens[row.token_index]
        if row.surface != token.surface:
            raise AnnotationError(
                f"surface mismatch at index {row.token_index}: "
                f"expected {token.surface!r}, found {row.surface!r}"
            )
        by_index[row.token_index] = row

    merged = []
    for token in tokens:
        row = by_index.get(token.index)
        if row is None:
            merged.append(AnnotatedToken(token.surface, token.index, token.char_offset))
        else:
            merged.append(
                AnnotatedToken(token.surface, token.index, token.char_offset, row.pos, row.lemma, row.sense)
            )
    return merged


def dump_annotations(tokens: list[AnnotatedToken], annotated_only: bool = False) -> str:
    """Serialize annotated tokens back to sidecar TSV text."""
    lines = [ANNOTATION_HEADER]
    for t in tokens:
        if annotated_only and not t.annotated:
            continue
        lines.append("\t".join((str(t.index), t.surface, t.pos or "", t.lemma or "", t.sense or "")))
    return "\n".join(lines) + "\n"


def read_annotated(corpus_path, annotation_path=None, nfc: bool = False) -> list[AnnotatedToken]:
    """Load, tokenize and merge in one step."""
    tokens = tokenize(load_corpus(corpus_path, nfc=nfc))
    rows = load_annotations(annotation_path) if annotation_path else []
    return merge_annotations(tokens, rows)
