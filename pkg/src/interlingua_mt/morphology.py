"""A-tergo dictionary, suffix induction and the rule/exception lemmatizer."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from .errors import MorphologyError

LEMMA_MARK = "-"
MAX_SUFFIX = 5

# velar palatalization (ČOVJEK / ČOVJEČE); used only when matching stems
PALATAL = {"Č": "K", "Ž": "G", "Š": "H"}


@dataclass(frozen=True)
class InverseDictionary:
    words: tuple[str, ...]

    def __post_init__(self):
        for a, b in zip(self.words, self.words[1:]):
            if not a[::-1] < b[::-1]:
                raise ValueError(f"a-tergo order violated at {a!r}, {b!r}")

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def to_text(self) -> str:
        return "".join(w + "\n" for w in self.words)

    @classmethod
    def from_text(cls, text: str) -> "InverseDictionary":
        return build_inverse_dictionary(l.strip() for l in text.splitlines() if l.strip())


def build_inverse_dictionary(vocab: Iterable[str]) -> InverseDictionary:
    return InverseDictionary(tuple(sorted(set(vocab), key=lambda w: w[::-1])))


@dataclass(frozen=True, order=True)
class SuffixRule:
    suffix: str
    support: int

    def __post_init__(self):
        if not self.suffix:
            raise ValueError("empty suffix")

    def strip(self, word: str) -> str:
        return word[: len(word) - len(self.suffix)]


def _normalize_stem(stem: str) -> str:
    if stem and stem[-1] in PALATAL:
        return stem[:-1] + PALATAL[stem[-1]]
    return stem


def induce_suffixes(
    invdict: InverseDictionary, min_support: int = 2, max_length: int = MAX_SUFFIX
) -> list[SuffixRule]:
    """Find endings that recur across the dictionary.

    An ending's support is the larger of two counts:

    * how many words end in it (a contiguous block of the a-tergo list);
    * the size of the largest stem family it splits off, i.e. how many words
      begin with the remaining stem.  Stems are compared modulo a final
      palatalized consonant, so ČOVJEČE = ČOVJEČ+E joins the ČOVJEK family.

    Rules come out longest first, then by support descending, then by suffix.
    """
    if min_support < 2:
        raise MorphologyError("min_support must be at least 2")
    words = list(invdict)
    ending: dict[str, int] = defaultdict(int)
    for w in words:
        for k in range(1, min(max_length, len(w) - 1) + 1):
            ending[w[-k:]] += 1

    # stem -> number of words starting with it (after normalization)
    family: dict[str, int] = defaultdict(int)
    for w in words:
        seen = set()
        for k in range(1, len(w) + 1):
            for stem in (w[:k], _normalize_stem(w[:k])):
                if stem not in seen:
                    seen.add(stem)
                    family[stem] += 1

    support: dict[str, int] = dict(ending)
    for w in words:
        for k in range(1, min(max_length, len(w) - 1) + 1):
            stem = _normalize_stem(w[:-k])
            support[w[-k:]] = max(support[w[-k:]], family[stem])

    rules = [SuffixRule(s, n) for s, n in support.items() if n >= min_support]
    rules.sort(key=lambda r: (-len(r.suffix), -r.support, r.suffix))
    return rules


def rules_to_tsv(rules: Sequence[SuffixRule]) -> str:
    return "".join(f"{r.suffix}\t{r.support}\n" for r in rules)


def rules_from_tsv(text: str) -> list[SuffixRule]:
    rules = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].rstrip()
        if not line:
            continue
        parts = line.split("\t")
        try:
            suffix = parts[0].strip().lstrip(LEMMA_MARK)
            support = int(parts[1]) if len(parts) > 1 else 0
            rules.append(SuffixRule(suffix, support))
        except ValueError as exc:
            raise MorphologyError(f"suffix rules line {lineno}: {exc}") from None
    return rules


@dataclass(frozen=True)
class LemmaTable:
    exceptions: Mapping[str, str] = field(default_factory=dict)
    paradigms: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for lemma in list(self.exceptions.values()) + list(self.paradigms):
            if not lemma.endswith(LEMMA_MARK):
                raise ValueError(f"lemma {lemma!r} lacks the trailing marker")

    @classmethod
    def from_exceptions(cls, exceptions: Mapping[str, str]) -> "LemmaTable":
        paradigms: dict[str, list[str]] = defaultdict(list)
        for surface, lemma in exceptions.items():
            paradigms[lemma].append(surface)
        return cls(dict(exceptions), {k: tuple(v) for k, v in paradigms.items()})

    @classmethod
    def from_tsv(cls, text: str) -> "LemmaTable":
        exceptions = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].rstrip()
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise MorphologyError(f"exception table line {lineno}: expected surface<TAB>lemma")
            exceptions[parts[0].strip().upper()] = parts[1].strip().upper()
        try:
            return cls.from_exceptions(exceptions)
        except ValueError as exc:
            raise MorphologyError(str(exc)) from None

    def to_tsv(self) -> str:
        return "".join(f"{s}\t{l}\n" for s, l in self.exceptions.items())


def lemmatize(
    word: str,
    rules: Sequence[SuffixRule],
    table: Optional[LemmaTable] = None,
    min_stem: int = 2,
) -> str:
    """Map a surface form to its marked lemma (``ČOVJEKOM`` -> ``ČOVJE-``).

    Order: exception table, then a bare known lemma (so lemmatizing a stem is
    a no-op), then the longest rule leaving at least ``min_stem`` letters.
    """
    table = table or LemmaTable()
    if word in table.exceptions:
        return table.exceptions[word]
    if word + LEMMA_MARK in table.paradigms:
        return word + LEMMA_MARK
    best = None
    for rule in rules:
        if word.endswith(rule.suffix) and len(word) - len(rule.suffix) >= min_stem:
            if best is None or len(rule.suffix) > len(best.suffix):
                best = rule
    stem = best.strip(word) if best else word
    return stem + LEMMA_MARK


def strip_marker(lemma: str) -> str:
    return lemma[:-1] if lemma.endswith(LEMMA_MARK) else lemma


def load_rules(path) -> list[SuffixRule]:
    return rules_from_tsv(Path(path).read_text(encoding="utf-8"))


def load_lemma_table(path) -> LemmaTable:
    return LemmaTable.from_tsv(Path(path).read_text(encoding="utf-8"))
