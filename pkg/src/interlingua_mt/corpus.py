"""Tokenization and frequency tables.

Text is case-folded to upper case at tokenization time (diacritics kept), so
every later stage works on forms like ``ČOVJEK`` and ``PUŠI``.  Optional role
markup ``word/SUBJ``, ``word/PRED`` and ``word/OBJ`` is recognised inline.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence

ROLES = ("SUBJ", "PRED", "OBJ")

_SENTENCE_END = re.compile(r"[.!?]+")
_ROLE_MARK = re.compile(r"(.*?)/(SUBJ|PRED|OBJ)\W*", re.IGNORECASE)
_WORD = re.compile(r"[^\W_]+")


@dataclass(frozen=True)
class Token:
    surface: str
    position: int

    def __post_init__(self):
        if not self.surface or any(ch.isspace() for ch in self.surface):
            raise ValueError(f"invalid token surface {self.surface!r}")


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    roles: Optional[tuple[Optional[str], ...]] = None

    def __post_init__(self):
        for i, tok in enumerate(self.tokens):
            if tok.position != i:
                raise ValueError("token positions must be 0..n-1")
        if self.roles is not None and len(self.roles) != len(self.tokens):
            raise ValueError("one role slot per token")

    @classmethod
    def from_words(cls, words: Iterable[str], roles=None) -> "Sentence":
        toks = tuple(Token(w.upper(), i) for i, w in enumerate(words))
        return cls(toks, tuple(roles) if roles is not None else None)

    @property
    def words(self) -> list[str]:
        return [t.surface for t in self.tokens]

    def role(self, i: int) -> Optional[str]:
        return None if self.roles is None else self.roles[i]

    def __len__(self):
        return len(self.tokens)


def tokenize(text: str) -> list[Sentence]:
    """Split ``text`` into sentences on terminal punctuation, then into words.

    >>> [s.words for s in tokenize("Čovjek puši lulu.")]
    [['ČOVJEK', 'PUŠI', 'LULU']]
    """
    sentences = []
    for chunk in _SENTENCE_END.split(text):
        words: list[str] = []
        roles: list[Optional[str]] = []
        for piece in chunk.split():
            role = None
            m = _ROLE_MARK.fullmatch(piece)
            if m:
                piece, role = m.group(1), m.group(2).upper()
            found = _WORD.findall(piece)
            if not found:
                continue
            words.extend(w.upper() for w in found)
            # a role mark attaches to the last word of its piece
            roles.extend([None] * (len(found) - 1) + [role])
        if words:
            has_roles = any(r is not None for r in roles)
            sentences.append(Sentence.from_words(words, roles if has_roles else None))
    return sentences


def read_corpus(path) -> list[Sentence]:
    return tokenize(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class FrequencyTable:
    counts: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if any(c < 0 for c in self.counts.values()):
            raise ValueError("counts must be non-negative")
        object.__setattr__(self, "counts", MappingProxyType(dict(self.counts)))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, word):
        return self.counts.get(word, 0)

    def __contains__(self, word):
        return word in self.counts

    def __len__(self):
        return len(self.counts)

    def ranked(self) -> list[tuple[str, int]]:
        """Entries by descending count, ties lexicographic."""
        return sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))

    def merge(self, other: "FrequencyTable") -> "FrequencyTable":
        return FrequencyTable(Counter(self.counts) + Counter(other.counts))

    def to_tsv(self) -> str:
        return "".join(f"{w}\t{c}\n" for w, c in self.ranked())

    @classmethod
    def from_tsv(cls, text: str) -> "FrequencyTable":
        counts = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                word, count = line.split("\t")
                counts[word] = int(count)
            except ValueError as exc:
                raise ValueError(f"line {lineno}: expected word<TAB>count") from exc
        return cls(counts)


def count_words(corpus: Iterable[Sentence]) -> FrequencyTable:
    return FrequencyTable(Counter(tok.surface for s in corpus for tok in s.tokens))


@dataclass(frozen=True)
class Vocabulary:
    words: tuple[str, ...]
    cap: int

    def __post_init__(self):
        if len(self.words) > self.cap:
            raise ValueError("vocabulary exceeds its cap")

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return word in self._index

    @cached_property
    def _index(self):
        return frozenset(self.words)

    @classmethod
    def of(cls, words: Sequence[str]) -> "Vocabulary":
        """Wrap an explicit word list (duplicates dropped, order kept)."""
        uniq = tuple(dict.fromkeys(words))
        return cls(uniq, max(len(uniq), 1))


def truncate_vocabulary(table: FrequencyTable, n: int) -> Vocabulary:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Vocabulary(tuple(w for w, _ in table.ranked()[:n]), n)
