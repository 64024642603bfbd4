"""Meaning-keyed thesaurus: loading, lookup and collapse.

File layout (key order is significant)::

    {"ČOVJE-": {"mankind": {"193.5": "LITTLENESS", "690.2": "AGENT"},
                "man": {"554.4": "REPRESENTATION", ...}},
     "@TARGET": {"MANKIND": {"lemma": "man", "category": "n"}, ...}}

Senses are listed in descending frequency; codes are opaque strings.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .errors import LexiconError
from .morphology import LEMMA_MARK

TARGET_KEY = "@TARGET"


@dataclass(frozen=True)
class MeaningTag:
    tag: str
    code: str

    def __post_init__(self):
        if not self.tag or self.tag != self.tag.upper():
            raise ValueError(f"meaning tag must be non-empty upper case: {self.tag!r}")


@dataclass(frozen=True)
class SenseEntry:
    sense: str
    meanings: tuple[MeaningTag, ...]


@dataclass(frozen=True)
class TargetEntry:
    lemma: str
    category: str


@dataclass(frozen=True)
class Thesaurus:
    entries: Mapping[str, tuple[SenseEntry, ...]] = field(default_factory=dict)
    target_lexicon: Mapping[str, TargetEntry] = field(default_factory=dict)

    def __post_init__(self):
        for lemma in self.entries:
            if not lemma.endswith(LEMMA_MARK):
                raise LexiconError(f"thesaurus key {lemma!r} must end with {LEMMA_MARK!r}")

    def __len__(self):
        return len(self.entries)

    def __contains__(self, lemma):
        return lemma in self.entries

    def target(self, tag: str) -> TargetEntry:
        try:
            return self.target_lexicon[tag]
        except KeyError:
            raise LexiconError(f"meaning {tag!r} has no target-lexicon entry") from None

    def to_json_obj(self) -> dict:
        obj: dict = {
            lemma: {s.sense: {m.code: m.tag for m in s.meanings} for s in senses}
            for lemma, senses in self.entries.items()
        }
        if self.target_lexicon:
            obj[TARGET_KEY] = {
                tag: {"lemma": t.lemma, "category": t.category}
                for tag, t in self.target_lexicon.items()
            }
        return obj

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), ensure_ascii=False, indent=2) + "\n"


def _reject_duplicates(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise LexiconError(f"duplicate key {key!r}")
        obj[key] = value
    return obj


def parse_thesaurus(text: str) -> Thesaurus:
    try:
        raw = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise LexiconError(
            f"malformed thesaurus at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(raw, dict):
        raise LexiconError("thesaurus must be a JSON object")

    target = {}
    for tag, item in raw.pop(TARGET_KEY, {}).items():
        if not isinstance(item, dict) or "lemma" not in item or "category" not in item:
            raise LexiconError(f"target entry {tag!r} needs 'lemma' and 'category'")
        target[tag] = TargetEntry(item["lemma"], item["category"])

    entries = {}
    for lemma, senses in raw.items():
        if not isinstance(senses, dict):
            raise LexiconError(f"entry {lemma!r} must map senses to meanings")
        parsed = []
        for sense, meanings in senses.items():
            if not isinstance(meanings, dict):
                raise LexiconError(f"sense {lemma}/{sense} must map codes to tags")
            try:
                tags = tuple(MeaningTag(str(tag), str(code)) for code, tag in meanings.items())
            except ValueError as exc:
                raise LexiconError(f"{lemma}/{sense}: {exc}") from None
            parsed.append(SenseEntry(sense, tags))
        entries[lemma] = tuple(parsed)
    return Thesaurus(entries, target)


def load_thesaurus(path) -> Thesaurus:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LexiconError(f"cannot read thesaurus {path}: {exc.strerror}") from None
    return parse_thesaurus(text)


def lookup(thesaurus: Thesaurus, lemma: str) -> list[SenseEntry]:
    """Sense list for ``lemma``; empty when the lemma is unknown."""
    return list(thesaurus.entries.get(lemma, ()))


@dataclass(frozen=True)
class CollapsedMeanings:
    lemma: str
    meanings: tuple[MeaningTag, ...]

    def __len__(self):
        return len(self.meanings)

    def render(self) -> str:
        """The collapsed list in the thesaurus notation, codes left bare."""
        body = ", ".join(f'{m.code}: "{m.tag}"' for m in self.meanings)
        return "{" + body + "}"


def collapse(senses: Sequence[SenseEntry], lemma: str = "") -> CollapsedMeanings:
    """Drop the sense glosses and concatenate their meanings in order."""
    return CollapsedMeanings(lemma, tuple(m for s in senses for m in s.meanings))
