"""Sentential word alignment from monolingual statistics.

Two aligners: rank-for-rank pairing by unigram surprisal, and a bigram
aligner that pairs words whose in-context surprisals are closest.  The
latter is solved exactly (subset DP) for short sentences and greedily above
that; :func:`brute_force_align` is the enumeration oracle for both.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import permutations, combinations
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .corpus import FrequencyTable, Sentence
from .errors import AlignmentError

BOS = "<s>"
EXHAUSTIVE_LIMIT = 8
NULL_COST = 2.0

Words = Sequence[str]


def _words(s) -> list[str]:
    return s.words if isinstance(s, Sentence) else list(s)


# ----------------------------------------------------------- unigram


@dataclass(frozen=True)
class WordSurprisalTable:
    bits: Mapping[str, float]
    oov_bits: float

    def __getitem__(self, word) -> float:
        return self.bits.get(word, self.oov_bits)


def build_surprisal_table(freq: FrequencyTable) -> WordSurprisalTable:
    """Add-one smoothed self-information, ``-log2((c+1)/(N+V))``."""
    if freq.total <= 0:
        raise AlignmentError("empty frequency table")
    denom = freq.total + len(freq)
    bits = {w: -math.log2((c + 1) / denom) for w, c in freq.counts.items()}
    return WordSurprisalTable(bits, -math.log2(1 / denom))


@dataclass(frozen=True)
class Alignment:
    pairs: tuple[tuple[int, int], ...]
    unaligned_src: tuple[int, ...]
    unaligned_tgt: tuple[int, ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], n_src: int, n_tgt: int) -> "Alignment":
        pairs = tuple(sorted(pairs))
        used_s = {i for i, _ in pairs}
        used_t = {j for _, j in pairs}
        if len(used_s) != len(pairs) or len(used_t) != len(pairs):
            raise AlignmentError("an index appears in more than one pair")
        if any(not (0 <= i < n_src and 0 <= j < n_tgt) for i, j in pairs):
            raise AlignmentError("pair index out of range")
        return cls(
            pairs,
            tuple(i for i in range(n_src) if i not in used_s),
            tuple(j for j in range(n_tgt) if j not in used_t),
        )

    def pharaoh(self) -> str:
        return " ".join(f"{i}-{j}" for i, j in self.pairs)


def parse_pharaoh(line: str) -> list[tuple[int, int]]:
    out = []
    for item in line.split():
        i, j = item.split("-")
        out.append((int(i), int(j)))
    return out


def align_by_entropy(src, tgt, src_table: WordSurprisalTable, tgt_table: WordSurprisalTable) -> Alignment:
    """Pair the i-th most surprising source word with the i-th target one."""
    s, t = _words(src), _words(tgt)
    s_rank = sorted(range(len(s)), key=lambda i: (-src_table[s[i]], i))
    t_rank = sorted(range(len(t)), key=lambda j: (-tgt_table[t[j]], j))
    return Alignment.from_pairs(zip(s_rank, t_rank), len(s), len(t))


# ----------------------------------------------------------- bigram


@dataclass(frozen=True)
class WordBigramModel:
    counts: Mapping[tuple[str, str], int]
    context_totals: Mapping[str, int]
    vocabulary: frozenset

    def prob(self, prev: str, word: str) -> float:
        """Add-one smoothed p(word | prev); one extra slot covers unseen words."""
        v = len(self.vocabulary) + 1
        return (self.counts.get((prev, word), 0) + 1) / (self.context_totals.get(prev, 0) + v)

    def conditional(self, prev: str) -> dict[str, float]:
        """Full distribution for one context, the unseen-word slot included."""
        dist = {w: self.prob(prev, w) for w in self.vocabulary}
        dist[None] = 1 / (self.context_totals.get(prev, 0) + len(self.vocabulary) + 1)
        return dist

    def surprisals(self, words: Words) -> list[float]:
        prevs = [BOS] + list(words[:-1])
        return [-math.log2(self.prob(p, w)) for p, w in zip(prevs, words)]


def build_bigram_model(corpus: Iterable) -> WordBigramModel:
    counts: Counter = Counter()
    totals: Counter = Counter()
    vocab = set()
    for sent in corpus:
        words = _words(sent)
        vocab.update(words)
        for prev, w in zip([BOS] + words[:-1], words):
            counts[prev, w] += 1
            totals[prev] += 1
    return WordBigramModel(dict(counts), dict(totals), frozenset(vocab))


@dataclass(frozen=True)
class CostMatrix:
    """Pairing costs, rows indexed by source position."""

    rows: tuple[tuple[float, ...], ...]
    n_src: int
    n_tgt: int

    @classmethod
    def build(cls, n_src: int, n_tgt: int, fn: Callable[[int, int], float]) -> "CostMatrix":
        return cls(tuple(tuple(fn(i, j) for j in range(n_tgt)) for i in range(n_src)), n_src, n_tgt)

    @property
    def transpose(self) -> bool:
        # the shorter side is mapped into the longer; source on ties
        return self.n_src > self.n_tgt

    @property
    def short(self) -> int:
        return min(self.n_src, self.n_tgt)

    @property
    def long(self) -> int:
        return max(self.n_src, self.n_tgt)

    def at(self, i: int, j: int) -> float:
        """Cost of short-side ``i`` with long-side ``j``."""
        return self.rows[j][i] if self.transpose else self.rows[i][j]

    def total(self, assign: Sequence[Optional[int]], null_cost: float) -> float:
        """Left-to-right sum over the short side; NULL costs ``null_cost``."""
        total = 0.0
        for i, j in enumerate(assign):
            total += null_cost if j is None else self.at(i, j)
        return total

    def alignment(self, assign: Sequence[Optional[int]]) -> Alignment:
        pairs = [(j, i) if self.transpose else (i, j) for i, j in enumerate(assign) if j is not None]
        return Alignment.from_pairs(pairs, self.n_src, self.n_tgt)


def _tie_key(assign):
    return tuple(math.inf if j is None else j for j in assign)


@dataclass(frozen=True)
class ScoredAlignment:
    alignment: Alignment
    cost: float


def bigram_costs(src, tgt, src_model: WordBigramModel, tgt_model: WordBigramModel) -> CostMatrix:
    a = src_model.surprisals(_words(src))
    b = tgt_model.surprisals(_words(tgt))
    return CostMatrix.build(len(a), len(b), lambda i, j: abs(a[i] - b[j]))


def exhaustive_align(cost: CostMatrix, null_cost: float = NULL_COST) -> ScoredAlignment:
    """Exact minimum by DP over subsets of the longer side."""
    # used long-side mask -> (cost so far, assignment so far)
    states = {0: (0.0, ())}
    for i in range(cost.short):
        nxt: dict[int, tuple] = {}
        for mask, (c, assign) in states.items():
            options = [(None, c + null_cost, mask)]
            for j in range(cost.long):
                if not mask >> j & 1:
                    options.append((j, c + cost.at(i, j), mask | 1 << j))
            for j, nc, nmask in options:
                cand = (nc, assign + (j,))
                best = nxt.get(nmask)
                if best is None or (nc, _tie_key(cand[1])) < (best[0], _tie_key(best[1])):
                    nxt[nmask] = cand
        states = nxt
    c, assign = min(states.values(), key=lambda st: (st[0], _tie_key(st[1])))
    return ScoredAlignment(cost.alignment(assign), c)


def greedy_align(cost: CostMatrix, null_cost: float = NULL_COST) -> ScoredAlignment:
    """Take the cheapest remaining pair while it beats a NULL link."""
    cells = sorted((cost.at(i, j), i, j) for i in range(cost.short) for j in range(cost.long))
    assign: list[Optional[int]] = [None] * cost.short
    used = set()
    for c, i, j in cells:
        if c >= null_cost:
            break
        if assign[i] is None and j not in used:
            assign[i] = j
            used.add(j)
    return ScoredAlignment(cost.alignment(assign), cost.total(assign, null_cost))


def brute_force_matrix(cost: CostMatrix, null_cost: float = NULL_COST, limit: int = EXHAUSTIVE_LIMIT) -> ScoredAlignment:
    """Enumerate every injective partial map of the shorter side."""
    if cost.short > limit:
        raise AlignmentError(f"brute force is limited to {limit} tokens on the shorter side")
    best = None
    for k in range(cost.short + 1):
        for mapped in combinations(range(cost.short), k):
            for targets in permutations(range(cost.long), k):
                assign: list[Optional[int]] = [None] * cost.short
                for i, j in zip(mapped, targets):
                    assign[i] = j
                key = (cost.total(assign, null_cost), _tie_key(assign))
                if best is None or key < best[0]:
                    best = (key, tuple(assign))
    assert best is not None
    return ScoredAlignment(cost.alignment(best[1]), best[0][0])


def brute_force_align(
    src, tgt, cost_fn: Callable[[int, int], float], null_cost: float = NULL_COST, limit: int = EXHAUSTIVE_LIMIT
) -> ScoredAlignment:
    """Oracle: exhaustive minimum for ``cost_fn(src_index, tgt_index)``."""
    cost = CostMatrix.build(len(_words(src)), len(_words(tgt)), cost_fn)
    return brute_force_matrix(cost, null_cost, limit)


def align_by_bigrams(
    src,
    tgt,
    src_model: WordBigramModel,
    tgt_model: WordBigramModel,
    mode: str = "auto",
    null_cost: float = NULL_COST,
) -> ScoredAlignment:
    """Pair words whose bigram surprisals in their own language are closest.

    ``mode`` is ``exhaustive``, ``greedy`` or ``auto`` (exhaustive up to
    eight tokens per side).
    """
    cost = bigram_costs(src, tgt, src_model, tgt_model)
    if mode == "auto":
        longest = max(len(_words(src)), len(_words(tgt)))
        mode = "exhaustive" if longest <= EXHAUSTIVE_LIMIT else "greedy"
    if mode == "exhaustive":
        return exhaustive_align(cost, null_cost)
    if mode == "greedy":
        return greedy_align(cost, null_cost)
    raise AlignmentError(f"unknown mode {mode!r}")


def align_oracle(src, tgt, src_model, tgt_model, null_cost: float = NULL_COST) -> ScoredAlignment:
    return brute_force_matrix(bigram_costs(src, tgt, src_model, tgt_model), null_cost)
