"""Categorial grammar with forward and backward application only.

Categories are built from atoms with two slashes: ``x\\y`` looks left for an
``x`` and yields ``y``; ``y/x`` looks right for an ``x``.  A sequence is
grammatical when some order of adjacent cancellations leaves ``s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Under:
    """``arg\\result``"""

    arg: "Category"
    result: "Category"

    def __str__(self):
        return f"{_wrap(self.arg)}\\{_wrap(self.result)}"


@dataclass(frozen=True)
class Over:
    """``result/arg``"""

    result: "Category"
    arg: "Category"

    def __str__(self):
        return f"{_wrap(self.result)}/{_wrap(self.arg)}"


Category = Union[Atom, Under, Over]

N, S = Atom("n"), Atom("s")
IV = Under(N, S)           # n\s
TV = Over(IV, N)           # (n\s)/n
BASIC = (N, S, IV, TV)

ROLE_CATEGORIES = {"SUBJ": {N}, "OBJ": {N}, "PRED": {IV, TV}}


def _wrap(c: Category) -> str:
    return str(c) if isinstance(c, Atom) else f"({c})"


def parse_category(text: str) -> Category:
    """Parse ``n``, ``n\\s``, ``(n\\s)/n`` ...; slashes associate to the left."""
    tokens = []
    for ch in text.replace(" ", ""):
        if ch in "()\\/":
            tokens.append(ch)
        elif tokens and tokens[-1] not in "()\\/":
            tokens[-1] += ch
        else:
            tokens.append(ch)
    pos = 0

    def primary():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of category {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            c = expr()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            pos += 1
            return c
        if tok in ")\\/":
            raise ValueError(f"unexpected {tok!r} in {text!r}")
        return Atom(tok)

    def expr():
        nonlocal pos
        left = primary()
        while pos < len(tokens) and tokens[pos] in "\\/":
            op = tokens[pos]
            pos += 1
            right = primary()
            left = Under(left, right) if op == "\\" else Over(left, right)
        return left

    cat = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in category {text!r}")
    return cat


def combine(left: Category, right: Category) -> Optional[Category]:
    """One adjacent cancellation, or None."""
    if isinstance(right, Under) and right.arg == left:
        return right.result
    if isinstance(left, Over) and left.arg == right:
        return left.result
    return None


def derivable(categories: Sequence[Category]) -> frozenset:
    """All categories the whole sequence can reduce to (CKY chart)."""
    return derivable_from_slots([{c} for c in categories])


def derivable_from_slots(slots: Sequence[Iterable[Category]]) -> frozenset:
    """Like :func:`derivable`, but each position offers a set of categories."""
    n = len(slots)
    if n == 0:
        return frozenset()
    chart = [[set() for _ in range(n + 1)] for _ in range(n)]
    for i, options in enumerate(slots):
        chart[i][i + 1].update(options)
    for width in range(2, n + 1):
        for i in range(n - width + 1):
            j = i + width
            cell = chart[i][j]
            for k in range(i + 1, j):
                for a in chart[i][k]:
                    for b in chart[k][j]:
                        c = combine(a, b)
                        if c is not None:
                            cell.add(c)
    return frozenset(chart[0][n])


def check_grammar(categories: Sequence[Category], goal: Category = S) -> bool:
    if not categories:
        return False
    return goal in _derivable_cached(tuple(categories))


def licensed(slots: Sequence[Iterable[Category]], goal: Category = S) -> bool:
    """True if some choice from each slot reduces to ``goal``."""
    return goal in derivable_from_slots(slots)


@lru_cache(maxsize=4096)
def _derivable_cached(categories: tuple) -> frozenset:
    return derivable(categories)
