import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interlingua_mt import fixtures
from interlingua_mt.codec import (
    CodeBook,
    SymbolDistribution,
    VOWELS,
    build_codebook,
    char_ngram_model,
    decode,
    encode,
    entropy,
    letter_frequencies,
    reduce_vocabulary,
    reduce_word,
)
from interlingua_mt.corpus import Vocabulary, read_corpus
from interlingua_mt.errors import CodecError


def shannon(probs):
    total = 0.0
    for p in probs:
        if p > 0:
            total -= p * math.log(p, 2)
    return total


def optimal_expected_length(probs):
    """Minimum expected length over all length vectors satisfying Kraft."""
    n = len(probs)
    best = math.inf
    for lengths in itertools.product(range(1, n), repeat=n):
        if sum(2.0 ** -l for l in lengths) <= 1.0:
            best = min(best, sum(p * l for p, l in zip(probs, lengths)))
    return best


def test_letter_frequencies():
    assert letter_frequencies("AAB").probs == {"A": 2 / 3, "B": 1 / 3}
    assert letter_frequencies("AB").probs == {"A": 0.5, "B": 0.5}
    with pytest.raises(CodecError, match="no symbols"):
        letter_frequencies("")


def test_croatian_sample_sums_to_one():
    dist = letter_frequencies(read_corpus(fixtures.SOURCE_CORPUS))
    assert abs(math.fsum(dist.probs.values()) - 1) <= 1e-9


def test_entropy_examples():
    assert entropy({"A": 1.0}) == 0.0
    assert entropy({"A": 0.5, "B": 0.5}) == 1.0
    assert entropy({"A": 0.5, "B": 0.25, "C": 0.25}) == 1.5


def test_codebook_examples():
    cb = build_codebook(SymbolDistribution({"A": 0.5, "B": 0.5}))
    assert sorted(cb.codes.values()) == ["0", "1"]
    cb = build_codebook(SymbolDistribution({"A": 0.5, "B": 0.25, "C": 0.25}))
    assert {s: len(c) for s, c in cb.codes.items()} == {"A": 1, "B": 2, "C": 2}


def test_frequent_letter_gets_shorter_code_than_rare_one():
    # A is common in the Croatian sample and F absent; smooth so F gets a code
    dist = letter_frequencies(read_corpus(fixtures.SOURCE_CORPUS))
    probs = dict(dist.probs)
    probs.setdefault("F", 0.0)
    probs = {k: (v + 1e-4) for k, v in probs.items()}
    total = sum(probs.values())
    cb = build_codebook(SymbolDistribution({k: v / total for k, v in probs.items()}))
    assert len(cb["A"]) < len(cb["F"])


def test_encode_decode_examples():
    cb = CodeBook({"A": "0", "B": "1"})
    assert encode("AB", cb) == "01"
    assert decode("01", cb) == "AB"
    assert encode("", cb) == "" and decode("", cb) == ""
    with pytest.raises(CodecError):
        encode("AC", cb)
    cb3 = CodeBook({"A": "0", "B": "10", "C": "11"})
    with pytest.raises(CodecError):
        decode("01", cb3)


def test_codebook_rejects_prefix_collision():
    with pytest.raises(ValueError):
        CodeBook({"A": "1", "B": "10"})


def test_codebook_tsv_round_trip():
    cb = build_codebook(letter_frequencies("ČOVJEK PUŠI LULU"))
    assert CodeBook.from_tsv(cb.to_tsv()) == cb


distributions = st.lists(st.floats(0.001, 1.0), min_size=2, max_size=30).map(
    lambda ws: SymbolDistribution({f"S{i:02d}": w / sum(ws) for i, w in enumerate(ws)})
)


@settings(max_examples=150)
@given(distributions)
def test_code_properties(dist):
    cb = build_codebook(dist)
    codes = list(cb.codes.values())
    for a, b in itertools.permutations(codes, 2):
        assert not b.startswith(a)
    h = shannon(dist.probs.values())
    assert abs(entropy(dist) - h) <= 1e-9
    length = cb.expected_length(dist)
    assert h - 1e-9 <= length < h + 1
    for a, b in itertools.permutations(dist.probs, 2):
        if dist[a] > dist[b]:
            assert len(cb[a]) <= len(cb[b])


@settings(max_examples=60)
@given(st.lists(st.floats(0.01, 1.0), min_size=2, max_size=6))
def test_huffman_matches_kraft_enumeration(weights):
    dist = SymbolDistribution({f"S{i}": w / sum(weights) for i, w in enumerate(weights)})
    cb = build_codebook(dist)
    assert cb.expected_length(dist) == pytest.approx(
        optimal_expected_length(list(dist.probs.values())), abs=1e-12
    )


@given(st.lists(st.sampled_from(sorted("ABČĆDŽ")), min_size=1, max_size=12).map("".join))
def test_round_trip(word):
    cb = build_codebook(letter_frequencies("ABČĆDŽ AAB"))
    assert decode(encode(word, cb), cb) == word


def test_codebook_is_deterministic():
    dist = SymbolDistribution({"A": 0.25, "B": 0.25, "C": 0.25, "D": 0.25})
    assert build_codebook(dist) == build_codebook(SymbolDistribution(dict(reversed(dist.probs.items()))))


# ------------------------------------------------------------ reduction


def test_reduce_singleton_vocabulary():
    dist = letter_frequencies(read_corpus(fixtures.SOURCE_CORPUS))
    r = reduce_word("ČOVJEK", Vocabulary.of(["ČOVJEK"]), dist)
    assert r.original == "ČOVJEK"
    assert not VOWELS & set(r.reduced)
    assert _is_subsequence(r.reduced, "ČOVJEK")


def test_reduce_vowels_only_keeps_luk_lik_apart():
    vocab = Vocabulary.of(["LUK", "LIK"])
    dist = letter_frequencies(["LUK", "LIK"])
    out = reduce_vocabulary(vocab, dist, deletable=VOWELS)
    forms = {r.reduced for r in out.values()}
    assert len(forms) == 2
    assert any(VOWELS & set(f) for f in forms)
    # exhaustive: no pair of vowel-free forms separates the two words
    stripped = {"".join(c for c in w if c not in VOWELS) for w in ("LUK", "LIK")}
    assert len(stripped) == 1


def test_reduce_never_empties():
    r = reduce_word("BBB", Vocabulary.of(["BBB"]), letter_frequencies("BBB"))
    assert r.reduced == "BBB"


def test_reduce_unknown_word():
    with pytest.raises(CodecError):
        reduce_word("X", Vocabulary.of(["A"]), letter_frequencies("A"))


def _is_subsequence(short, long):
    it = iter(long)
    return all(ch in it for ch in short)


words = st.lists(st.text("AEIKLMU", min_size=1, max_size=5), min_size=1, max_size=40, unique=True)


@settings(max_examples=100)
@given(words)
def test_reduction_injective_and_maximal(vocab):
    dist = letter_frequencies(vocab)
    out = reduce_vocabulary(vocab, dist)
    reduced = [out[w].reduced for w in vocab]
    assert len(set(reduced)) == len(vocab)
    originals = set(vocab)
    for w in vocab:
        r = out[w].reduced
        assert r and _is_subsequence(r, w)
        if r != w:
            assert r not in originals


# ------------------------------------------------------------ n-grams


def test_bigram_examples():
    m = char_ngram_model("AB AB", 2)
    assert m.prob("A", "B") == 1.0
    m = char_ngram_model("AA AB", 2)
    assert m.prob("A", "A") == 0.5 and m.prob("A", "B") == 0.5


def test_ngram_order_and_sentinels():
    with pytest.raises(CodecError):
        char_ngram_model("AB", 4)
    with pytest.raises(CodecError):
        char_ngram_model(["A^B"], 2)
    m = char_ngram_model("AB", 2, mark_end=True)
    assert m.prob("B", "$") == 1.0
    m3 = char_ngram_model("ABC", 3)
    assert m3.prob("^^", "A") == 1.0 and m3.prob("AB", "C") == 1.0


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("mark_end", [False, True])
def test_ngram_normalized(n, mark_end):
    m = char_ngram_model(read_corpus(fixtures.SOURCE_CORPUS), n, mark_end)
    for dist in m.cond.values():
        assert abs(math.fsum(dist.values()) - 1) <= 1e-9
