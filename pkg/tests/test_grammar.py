import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from interlingua_mt.grammar import (
    BASIC,
    IV,
    N,
    S,
    TV,
    Atom,
    Over,
    Under,
    check_grammar,
    licensed,
    parse_category,
)

# oracle representation: "n" | ("\\", arg, result) | ("/", result, arg)
ORACLE = {N: "n", S: "s", IV: ("\\", "n", "s"), TV: ("/", ("\\", "n", "s"), "n")}


def oracle_cancel(a, b):
    out = []
    if isinstance(b, tuple) and b[0] == "\\" and b[1] == a:
        out.append(b[2])
    if isinstance(a, tuple) and a[0] == "/" and a[2] == b:
        out.append(a[1])
    return out


def oracle_reduces(seq):
    """Try every order of adjacent cancellations."""
    if seq == ("s",):
        return True
    for i in range(len(seq) - 1):
        for c in oracle_cancel(seq[i], seq[i + 1]):
            if oracle_reduces(seq[:i] + (c,) + seq[i + 2:]):
                return True
    return False


def test_examples():
    assert check_grammar([N, TV, N])
    assert not check_grammar([N])
    assert check_grammar([N, IV])
    assert not check_grammar([])


def test_agrees_with_exhaustive_search_up_to_five():
    checked = 0
    for length in range(1, 6):
        for seq in itertools.product(BASIC, repeat=length):
            expected = oracle_reduces(tuple(ORACLE[c] for c in seq))
            assert check_grammar(list(seq)) == expected, seq
            checked += 1
    assert checked == 4 + 16 + 64 + 256 + 1024


@pytest.mark.parametrize(
    "text, cat",
    [
        ("n", N),
        ("n\\s", Under(N, S)),
        ("(n\\s)/n", Over(Under(N, S), N)),
        ("s/(n\\s)", Over(S, Under(N, S))),
        ("np", Atom("np")),
    ],
)
def test_parse_category(text, cat):
    assert parse_category(text) == cat
    assert parse_category(str(cat)) == cat


@pytest.mark.parametrize("bad", ["", "(n", "n\\", ")", "n)"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_category(bad)


@given(st.lists(st.sets(st.sampled_from(BASIC), min_size=1), min_size=1, max_size=4))
def test_slots_equal_any_choice(slots):
    expected = any(check_grammar(list(c)) for c in itertools.product(*slots))
    assert licensed(slots) == expected
