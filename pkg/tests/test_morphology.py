import pytest
from hypothesis import given
from hypothesis import strategies as st

from interlingua_mt import fixtures
from interlingua_mt.corpus import read_corpus
from interlingua_mt.errors import MorphologyError
from interlingua_mt.morphology import (
    InverseDictionary,
    LemmaTable,
    SuffixRule,
    build_inverse_dictionary,
    induce_suffixes,
    lemmatize,
    rules_from_tsv,
    rules_to_tsv,
    strip_marker,
)


def test_inverse_dictionary_examples():
    inv = build_inverse_dictionary(["ČOVJEKA", "ČOVJEKOM", "LULA"])
    assert inv.words == ("ČOVJEKA", "LULA", "ČOVJEKOM")
    assert build_inverse_dictionary([]).words == ()
    assert build_inverse_dictionary(["X"]).words == ("X",)


def test_inverse_dictionary_rejects_bad_order():
    with pytest.raises(ValueError):
        InverseDictionary(("LULA", "ČOVJEKA"))


@given(st.lists(st.text("AČKLMOU", min_size=1, max_size=6)))
def test_a_tergo_order(words):
    inv = build_inverse_dictionary(words)
    assert len(set(inv.words)) == len(inv.words) == len(set(words))
    for a, b in zip(inv.words, inv.words[1:]):
        assert a[::-1] < b[::-1]
    assert InverseDictionary.from_text(inv.to_text()) == inv


def test_induce_shared_ending():
    rules = induce_suffixes(build_inverse_dictionary(["ČOVJEKOM", "LULOM", "PUŠOM"]), 3)
    assert "OM" in [r.suffix for r in rules]
    assert all(r.support >= 3 for r in rules)


def test_induce_disjoint_endings():
    assert induce_suffixes(build_inverse_dictionary(["A", "B"]), 2) == []


def test_induce_case_table():
    rules = induce_suffixes(build_inverse_dictionary(fixtures.COVJEK_FORMS), 2)
    suffixes = {r.suffix for r in rules}
    assert {"A", "U", "OM", "E"} <= suffixes


def test_induce_min_support_guard():
    with pytest.raises(MorphologyError):
        induce_suffixes(build_inverse_dictionary(["A"]), 1)


def test_induce_order_and_determinism():
    inv = build_inverse_dictionary(w for s in read_corpus(fixtures.SOURCE_CORPUS) for w in s.words)
    rules = induce_suffixes(inv, 2)
    assert rules == induce_suffixes(inv, 2)
    keys = [(-len(r.suffix), -r.support, r.suffix) for r in rules]
    assert keys == sorted(keys)
    assert all(1 <= len(r.suffix) <= 5 for r in rules)


def test_rules_tsv_round_trip():
    rules = [SuffixRule("OM", 3), SuffixRule("A", 2)]
    assert rules_from_tsv(rules_to_tsv(rules)) == rules
    assert rules_from_tsv("# comment\n-OM\t4\n") == [SuffixRule("OM", 4)]


@pytest.mark.parametrize("form", fixtures.COVJEK_FORMS)
def test_all_case_forms_give_covje(resources, form):
    assert lemmatize(form, resources.rules, resources.lemma_table) == "ČOVJE-"


def test_other_fixture_lemmas(resources):
    assert lemmatize("PUŠI", resources.rules, resources.lemma_table) == "PUŠ-"
    assert lemmatize("LULU", resources.rules, resources.lemma_table) == "LUL-"


def test_vocative_goes_through_exception():
    table = LemmaTable.from_exceptions({"ČOVJEČE": "ČOVJE-"})
    assert lemmatize("ČOVJEČE", [SuffixRule("E", 0)], table) == "ČOVJE-"
    # without the exception the palatalized stem leaks through
    assert lemmatize("ČOVJEČE", [SuffixRule("E", 0)]) == "ČOVJEČ-"


def test_unknown_word_gets_marker():
    assert lemmatize("XYZ", []) == "XYZ-"
    assert lemmatize("JE", [SuffixRule("E", 0)]) == "JE-"


def test_lemma_table_requires_marker():
    with pytest.raises(ValueError):
        LemmaTable.from_exceptions({"ČOVJEČE": "ČOVJE"})


def test_idempotent_on_fixture_lemmas(resources, thesaurus):
    # the lexicon is every corpus lemma the thesaurus covers; stems outside it
    # (RJEČNI- from RJEČNIK) can be re-stripped by the bare rules
    words = {w for s in read_corpus(fixtures.SOURCE_CORPUS) for w in s.words}
    lemmas = {lemmatize(w, resources.rules, resources.lemma_table) for w in words}
    lemmas &= set(thesaurus.entries)
    assert len(lemmas) == len(thesaurus.entries)
    for lemma in lemmas:
        assert lemma.endswith("-")
        assert lemmatize(strip_marker(lemma), resources.rules, resources.lemma_table) == lemma
