"""Understanding (source -> interlingua) and generation (interlingua -> target).

The two halves only meet in the list of :class:`InterlinguaToken`; neither
touches thesaurus files directly, only the loaded :class:`Thesaurus`.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .codec import CodeBook, decode, encode
from .corpus import Sentence, tokenize
from .errors import CodecError, GenerationError, LexiconError, NoParseError, OOVError
from .grammar import ROLE_CATEGORIES, Category, licensed, parse_category
from .lexicon import CollapsedMeanings, MeaningTag, Thesaurus, collapse, lookup
from .morphology import LemmaTable, SuffixRule, lemmatize


@dataclass(frozen=True)
class InterlinguaToken:
    source: str
    lemma: str
    meaning: MeaningTag
    category: Category
    role: Optional[str] = None


@dataclass(frozen=True)
class Resources:
    """Everything the pipeline reads; kept apart from the algorithm."""

    rules: tuple[SuffixRule, ...]
    lemma_table: LemmaTable
    thesaurus: Thesaurus
    codebook: Optional[CodeBook] = None


@dataclass(frozen=True)
class Candidate:
    tag: str
    multiplicity: int
    first: MeaningTag


def rank_meanings(collapsed: CollapsedMeanings) -> list[Candidate]:
    """Distinct tags by multiplicity, ties broken by first occurrence."""
    counts = Counter(m.tag for m in collapsed.meanings)
    first: dict[str, MeaningTag] = {}
    for m in collapsed.meanings:
        first.setdefault(m.tag, m)
    order = {tag: i for i, tag in enumerate(first)}
    return [
        Candidate(tag, counts[tag], first[tag])
        for tag in sorted(first, key=lambda t: (-counts[t], order[t]))
    ]


def _category_of(thesaurus: Thesaurus, tag: str) -> Optional[Category]:
    entry = thesaurus.target_lexicon.get(tag)
    return None if entry is None else parse_category(entry.category)


def _options(collapsed, thesaurus, role) -> set:
    cats = {_category_of(thesaurus, c.tag) for c in rank_meanings(collapsed)}
    cats.discard(None)
    if role is not None:
        cats &= ROLE_CATEGORIES[role]
    return cats


def _select(collapsed, thesaurus, slots, position, role):
    decisions = []
    chosen = None
    for cand in rank_meanings(collapsed):
        record = {
            "tag": cand.tag,
            "code": cand.first.code,
            "multiplicity": cand.multiplicity,
        }
        decisions.append(record)
        if chosen is not None:
            record["status"] = "not-tried"
            continue
        cat = _category_of(thesaurus, cand.tag)
        record["category"] = None if cat is None else str(cat)
        if cat is None:
            record.update(status="rejected", reason="no target-lexicon entry")
        elif role is not None and cat not in ROLE_CATEGORIES[role]:
            record.update(status="rejected", reason=f"category {cat} does not fit role {role}")
        elif slots is not None and not licensed(
            [{cat} if i == position else s for i, s in enumerate(slots)]
        ):
            record.update(status="rejected", reason="sentence does not reduce to s")
        else:
            record["status"] = "selected"
            chosen = (cand.first, cat)
    return chosen, decisions


def select_meaning(
    collapsed: CollapsedMeanings,
    thesaurus: Thesaurus,
    slots: Optional[Sequence[set]] = None,
    position: int = 0,
    role: Optional[str] = None,
) -> MeaningTag:
    """Most frequent meaning whose category lets the sentence parse.

    ``slots`` holds the categories still possible at every position of the
    sentence; ``position`` is the one being decided.  Without ``slots`` no
    grammar check is made.
    """
    if not collapsed.meanings:
        raise OOVError(collapsed.lemma, collapsed.lemma)
    chosen, decisions = _select(collapsed, thesaurus, slots, position, role)
    if chosen is None:
        raise NoParseError(f"no meaning of {collapsed.lemma!r} fits the sentence", decisions)
    return chosen[0]


def _surface(sentence: Sentence, i: int, codebook, trace) -> str:
    word = sentence.tokens[i].surface
    if codebook is None:
        return word
    bits = encode(word, codebook)
    trace["bits"] = bits
    back = decode(bits, codebook)
    if back != word:
        raise CodecError(f"codec round trip changed {word!r} into {back!r}")
    return back


def understand(sentence: Sentence, resources: Resources, trace: Optional[list] = None):
    """Lemmatize, look up, collapse and select a meaning for every token."""
    trace = [] if trace is None else trace
    thesaurus = resources.thesaurus
    collapsed_all = []
    for i, tok in enumerate(sentence.tokens):
        step = {"position": i, "surface": tok.surface}
        if sentence.role(i):
            step["role"] = sentence.role(i)
        trace.append(step)
        word = _surface(sentence, i, resources.codebook, step)
        lemma = lemmatize(word, resources.rules, resources.lemma_table)
        step["lemma"] = lemma
        senses = lookup(thesaurus, lemma)
        if not senses:
            raise OOVError(tok.surface, lemma)
        step["senses"] = [s.sense for s in senses]
        col = collapse(senses, lemma)
        step["collapsed"] = col.render()
        collapsed_all.append(col)

    slots = [
        _options(col, thesaurus, sentence.role(i)) for i, col in enumerate(collapsed_all)
    ]
    if sentence.tokens and not licensed(slots):
        for i, col in enumerate(collapsed_all):
            trace[i]["candidates"] = _select(col, thesaurus, None, i, sentence.role(i))[1]
        raise NoParseError("no meaning assignment reduces the sentence to s", trace)

    out = []
    for i, col in enumerate(collapsed_all):
        role = sentence.role(i)
        chosen, decisions = _select(col, thesaurus, slots, i, role)
        trace[i]["candidates"] = decisions
        # unreachable while slots stay satisfiable; kept as a guard
        if chosen is None:
            raise NoParseError(f"no meaning of {col.lemma!r} fits the sentence", trace)
        meaning, cat = chosen
        slots[i] = {cat}
        trace[i]["selected"] = meaning.tag
        trace[i]["category"] = str(cat)
        out.append(InterlinguaToken(sentence.tokens[i].surface, col.lemma, meaning, cat, role))
    return out


def generate(interlingua: Sequence[InterlinguaToken], thesaurus: Thesaurus) -> str:
    """Emit target lemmas in source order; no reordering or inflection."""
    words = []
    for tok in interlingua:
        try:
            words.append(thesaurus.target(tok.meaning.tag).lemma)
        except LexiconError:
            raise GenerationError(f"meaning {tok.meaning.tag!r} has no target entry") from None
    return " ".join(words)


@dataclass(frozen=True)
class TranslationResult:
    source: Sentence
    interlingua: tuple[InterlinguaToken, ...]
    target: str
    trace: list = field(default_factory=list, compare=False)

    def to_json(self) -> str:
        return json.dumps(
            {"source": " ".join(self.source.words), "target": self.target, "tokens": self.trace},
            ensure_ascii=False,
        )


def translate(sentence, resources: Resources) -> TranslationResult:
    """Full pipeline for one sentence (a :class:`Sentence` or raw text)."""
    if isinstance(sentence, str):
        sents = tokenize(sentence)
        if len(sents) != 1:
            raise ValueError(f"expected one sentence, got {len(sents)}")
        sentence = sents[0]
    trace: list = []
    inter = understand(sentence, resources, trace)
    target = generate(inter, resources.thesaurus)
    return TranslationResult(sentence, tuple(inter), target, trace)
