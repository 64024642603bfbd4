"""Bundled desk-scale data and seeded synthetic data generators."""
from __future__ import annotations

import random
from importlib import resources as _res
from pathlib import Path

from .codec import letter_frequencies
from .corpus import Sentence, Vocabulary, read_corpus
from .lexicon import load_thesaurus
from .morphology import load_lemma_table, load_rules
from .translator import Resources

DATA = Path(str(_res.files("interlingua_mt") / "data"))

SOURCE_CORPUS = DATA / "hr.txt"
TARGET_CORPUS = DATA / "en.txt"
THESAURUS = DATA / "thesaurus_en.json"
THESAURUS_DE = DATA / "thesaurus_de.json"
SUFFIX_RULES = DATA / "suffix_rules.tsv"
EXCEPTIONS = DATA / "exceptions.tsv"

EXAMPLE_SENTENCE = "Čovjek puši lulu."
# nominative, genitive, dative, accusative, vocative, locative, instrumental
COVJEK_FORMS = ("ČOVJEK", "ČOVJEKA", "ČOVJEKU", "ČOVJEKA", "ČOVJEČE", "ČOVJEKU", "ČOVJEKOM")


def default_resources(thesaurus=THESAURUS, rules=SUFFIX_RULES, exceptions=EXCEPTIONS) -> Resources:
    return Resources(
        tuple(load_rules(rules)), load_lemma_table(exceptions), load_thesaurus(thesaurus)
    )


def synthetic_vocabulary(size: int = 10_000, seed: int = 0, min_len: int = 2, max_len: int = 10) -> Vocabulary:
    """Distinct pseudo-words drawn from the bundled corpus's letter statistics."""
    corpus = read_corpus(SOURCE_CORPUS)
    dist = letter_frequencies(corpus)
    letters = sorted(dist.probs)
    weights = [dist.probs[c] for c in letters]
    rng = random.Random(seed)
    words = dict.fromkeys(w for s in corpus for w in s.words)
    while len(words) < size:
        n = rng.randint(min_len, max_len)
        words.setdefault("".join(rng.choices(letters, weights, k=n)))
    return Vocabulary(tuple(list(words)[:size]), size)


def random_corpus(rng: random.Random, vocab, n_sentences: int, max_len: int = 6) -> list[Sentence]:
    return [
        Sentence.from_words(rng.choices(vocab, k=rng.randint(1, max_len)))
        for _ in range(n_sentences)
    ]
