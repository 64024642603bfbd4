from hypothesis import given
from hypothesis import strategies as st

from interlingua_mt.corpus import (
    FrequencyTable,
    Sentence,
    count_words,
    tokenize,
    truncate_vocabulary,
)


def test_tokenize_example_sentence():
    sents = tokenize("Čovjek puši lulu.")
    assert len(sents) == 1
    assert sents[0].words == ["ČOVJEK", "PUŠI", "LULU"]
    assert [t.position for t in sents[0].tokens] == [0, 1, 2]


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_two_sentences():
    sents = tokenize("A. B.")
    assert [s.words for s in sents] == [["A"], ["B"]]


def test_tokenize_role_markup():
    (s,) = tokenize("čovjek/SUBJ puši/PRED lulu/OBJ.")
    assert s.words == ["ČOVJEK", "PUŠI", "LULU"]
    assert s.roles == ("SUBJ", "PRED", "OBJ")


def test_tokenize_strips_punctuation():
    (s,) = tokenize("Čovječe, gdje je lula?")
    assert s.words == ["ČOVJEČE", "GDJE", "JE", "LULA"]
    assert s.roles is None


def test_count_words():
    t = count_words([Sentence.from_words(["A", "B", "A"])])
    assert dict(t.counts) == {"A": 2, "B": 1}
    assert t.total == 3
    empty = count_words([])
    assert dict(empty.counts) == {} and empty.total == 0
    table = count_words(tokenize("Čovjek puši lulu."))
    assert dict(table.counts) == {"ČOVJEK": 1, "PUŠI": 1, "LULU": 1}


def test_truncate_vocabulary():
    assert truncate_vocabulary(FrequencyTable({"A": 5, "B": 3, "C": 1}), 2).words == ("A", "B")
    assert truncate_vocabulary(FrequencyTable({"A": 2, "B": 2}), 1).words == ("A",)
    assert truncate_vocabulary(FrequencyTable({}), 10).words == ()


def test_tsv_round_trip():
    t = FrequencyTable({"B": 2, "A": 2, "C": 7})
    assert t.to_tsv() == "C\t7\nA\t2\nB\t2\n"
    assert FrequencyTable.from_tsv(t.to_tsv()) == t


counts = st.dictionaries(st.text("ABCDE", min_size=1, max_size=3), st.integers(0, 50))


@given(counts)
def test_total_is_sum(c):
    assert FrequencyTable(c).total == sum(c.values())


@given(counts, st.integers(1, 20))
def test_truncation_is_monotone(c, n):
    t = FrequencyTable(c)
    short, longer = truncate_vocabulary(t, n).words, truncate_vocabulary(t, n + 1).words
    assert longer[: len(short)] == short


@given(st.text(max_size=80))
def test_tokenize_deterministic(text):
    a, b = tokenize(text), tokenize(text)
    assert a == b
    for s in a:
        for tok in s.tokens:
            assert tok.surface and not any(ch.isspace() for ch in tok.surface)
