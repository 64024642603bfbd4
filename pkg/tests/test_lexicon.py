import json

import pytest

from interlingua_mt import fixtures
from interlingua_mt.errors import LexiconError
from interlingua_mt.lexicon import (
    MeaningTag,
    SenseEntry,
    collapse,
    load_thesaurus,
    lookup,
    parse_thesaurus,
)

COLLAPSED = '{193.5: "LITTLENESS", 690.2: "AGENT", 554.4: "REPRESENTATION", 372.1: "MANKIND", 372.3: "MANKIND"}'


def test_covje_entry(thesaurus):
    senses = lookup(thesaurus, "ČOVJE-")
    assert [s.sense for s in senses] == ["mankind", "man"]
    assert [(m.code, m.tag) for m in senses[0].meanings] == [("193.5", "LITTLENESS"), ("690.2", "AGENT")]
    assert [(m.code, m.tag) for m in senses[1].meanings] == [
        ("554.4", "REPRESENTATION"),
        ("372.1", "MANKIND"),
        ("372.3", "MANKIND"),
    ]


def test_collapse_reproduces_printed_list(thesaurus):
    col = collapse(lookup(thesaurus, "ČOVJE-"), "ČOVJE-")
    assert col.render() == COLLAPSED
    assert len(col) == 5


def test_collapse_edge_cases():
    assert collapse([]).meanings == ()
    one = SenseEntry("x", (MeaningTag("A", "1"), MeaningTag("B", "2")))
    assert collapse([one]).meanings == one.meanings


def test_lookup_oov_and_singleton():
    th = parse_thesaurus('{"X-": {"only": {"1.0": "ONE"}}}')
    assert lookup(th, "XYZ-") == []
    assert lookup(th, "X-") == [SenseEntry("only", (MeaningTag("ONE", "1.0"),))]


def test_empty_object():
    th = parse_thesaurus("{}")
    assert len(th) == 0 and th.target_lexicon == {}


def test_duplicate_lemma_rejected():
    with pytest.raises(LexiconError, match="duplicate"):
        parse_thesaurus('{"A-": {"a": {"1": "X"}}, "A-": {"b": {"2": "Y"}}}')


def test_malformed_reports_position():
    with pytest.raises(LexiconError, match=r"line 2, column"):
        parse_thesaurus('{"A-": {"a": \n {"1": "X"}')


def test_missing_file():
    with pytest.raises(LexiconError):
        load_thesaurus("/no/such/thesaurus.json")


def test_validation():
    with pytest.raises(LexiconError):
        parse_thesaurus('{"A": {"a": {"1": "X"}}}')
    with pytest.raises(LexiconError):
        parse_thesaurus('{"A-": {"a": {"1": "lower"}}}')
    with pytest.raises(LexiconError):
        parse_thesaurus('{"@TARGET": {"X": {"lemma": "x"}}}')


@pytest.mark.parametrize("path", [fixtures.THESAURUS, fixtures.THESAURUS_DE])
def test_round_trip_preserves_order(path):
    th = load_thesaurus(path)
    again = parse_thesaurus(th.dumps())
    assert again == th
    assert list(again.entries) == list(th.entries)
    raw = json.loads(path.read_text(encoding="utf-8"))
    assert list(th.to_json_obj()) == list(raw)


def test_target_entry(thesaurus):
    assert thesaurus.target("MANKIND").lemma == "man"
    with pytest.raises(LexiconError):
        thesaurus.target("NOPE")
