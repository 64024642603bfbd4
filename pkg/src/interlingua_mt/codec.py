"""Letter statistics, entropy, prefix coding and redundant-letter removal."""
from __future__ import annotations

import heapq
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .corpus import Sentence, Vocabulary, tokenize
from .errors import CodecError

VOWELS = frozenset("AEIOU")
START, END = "^", "$"
SENTINELS = frozenset((START, END))

Corpus = Union[str, Iterable[Sentence], Iterable[str]]


@dataclass(frozen=True)
class SymbolDistribution:
    probs: Mapping[str, float]

    def __post_init__(self):
        if any(p < 0 for p in self.probs.values()):
            raise ValueError("negative probability")
        if abs(math.fsum(self.probs.values()) - 1.0) > 1e-9:
            raise ValueError("probabilities must sum to 1")

    def __getitem__(self, symbol):
        return self.probs.get(symbol, 0.0)

    def to_tsv(self) -> str:
        rows = sorted(self.probs.items(), key=lambda kv: (-kv[1], kv[0]))
        return "".join(f"{s}\t{p:.9f}\n" for s, p in rows)

    @classmethod
    def from_tsv(cls, text: str) -> "SymbolDistribution":
        probs = {}
        for line in text.splitlines():
            if line.strip():
                sym, p = line.split("\t")
                probs[sym] = float(p)
        # 9 decimal places do not sum to exactly 1
        total = math.fsum(probs.values())
        return cls({s: p / total for s, p in probs.items()})


def _words(corpus: Corpus) -> list[str]:
    if isinstance(corpus, str):
        corpus = tokenize(corpus)
    out = []
    for item in corpus:
        if isinstance(item, Sentence):
            out.extend(item.words)
        else:
            out.append(item)
    return out


def letter_frequencies(corpus: Corpus) -> SymbolDistribution:
    """Maximum-likelihood letter probabilities over every token character."""
    counts = Counter(ch for w in _words(corpus) for ch in w)
    total = sum(counts.values())
    if total == 0:
        raise CodecError("no symbols")
    return SymbolDistribution({s: c / total for s, c in counts.items()})


def entropy(dist: Union[SymbolDistribution, Mapping[str, float]]) -> float:
    """Shannon entropy in bits per symbol."""
    probs = dist.probs if isinstance(dist, SymbolDistribution) else dist
    return -math.fsum(p * math.log2(p) for p in probs.values() if p > 0)


# ---------------------------------------------------------------- Huffman


def huffman_code_lengths(probs: Mapping[str, float]) -> dict[str, int]:
    """Code lengths of a Huffman tree.

    Equal weights merge the lexicographically smallest symbol set first.  A
    lone symbol gets length 1 so that it can still be written out.
    """
    if not probs:
        raise CodecError("no symbols")
    if len(probs) == 1:
        return {next(iter(probs)): 1}
    depth = dict.fromkeys(probs, 0)
    heap = [(p, (s,)) for s, p in probs.items()]
    heapq.heapify(heap)
    while len(heap) > 1:
        pa, a = heapq.heappop(heap)
        pb, b = heapq.heappop(heap)
        for s in a + b:
            depth[s] += 1
        heapq.heappush(heap, (pa + pb, tuple(sorted(a + b))))
    return depth


@dataclass(frozen=True)
class CodeBook:
    codes: Mapping[str, str]

    def __post_init__(self):
        ordered = sorted(self.codes.values())
        for a, b in zip(ordered, ordered[1:]):
            # any prefix pair is adjacent in sorted order
            if b.startswith(a):
                raise ValueError(f"code {a!r} is a prefix of {b!r}")

    def __getitem__(self, symbol):
        return self.codes[symbol]

    def __len__(self):
        return len(self.codes)

    def expected_length(self, dist: SymbolDistribution) -> float:
        return math.fsum(dist[s] * len(c) for s, c in self.codes.items())

    def to_tsv(self) -> str:
        rows = sorted(self.codes.items(), key=lambda kv: (len(kv[1]), kv[1]))
        return "".join(f"{s}\t{c}\n" for s, c in rows)

    @classmethod
    def from_tsv(cls, text: str) -> "CodeBook":
        codes = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[1] or set(parts[1]) - {"0", "1"}:
                raise CodecError(f"codebook line {lineno}: expected symbol<TAB>bits")
            codes[parts[0]] = parts[1]
        return cls(codes)


def build_codebook(dist: SymbolDistribution) -> CodeBook:
    """Canonical Huffman code: frequent letters get the short codewords."""
    lengths = huffman_code_lengths(dist.probs)
    codes = {}
    code, prev = 0, 0
    for sym, n in sorted(lengths.items(), key=lambda kv: (kv[1], kv[0])):
        code <<= n - prev
        codes[sym] = format(code, f"0{n}b")
        code += 1
        prev = n
    return CodeBook(codes)


def encode(word: str, cb: CodeBook) -> str:
    try:
        return "".join(cb.codes[ch] for ch in word)
    except KeyError as exc:
        raise CodecError(f"symbol {exc.args[0]!r} not in codebook") from None


def decode(bits: str, cb: CodeBook) -> str:
    table = {c: s for s, c in cb.codes.items()}
    longest = max(map(len, table), default=0)
    out, buf = [], ""
    for b in bits:
        if b not in "01":
            raise CodecError(f"not a bit: {b!r}")
        buf += b
        if buf in table:
            out.append(table[buf])
            buf = ""
        elif len(buf) >= longest:
            raise CodecError(f"undecodable bits {buf!r}")
    if buf:
        raise CodecError(f"trailing bits {buf!r} do not form a codeword")
    return "".join(out)


# ------------------------------------------------------ letter reduction


@dataclass(frozen=True)
class ReducedWord:
    original: str
    reduced: str


def _deletion_order(word: str, dist: SymbolDistribution) -> list[str]:
    return sorted(set(word), key=lambda c: (-dist[c], c not in VOWELS, c))


def reduce_vocabulary(
    vocab: Union[Vocabulary, Iterable[str]],
    dist: SymbolDistribution,
    deletable: Optional[Iterable[str]] = None,
) -> dict[str, ReducedWord]:
    """Strip low-information letters from every word, keeping forms distinct.

    Words are processed in vocabulary order (most frequent first).  For each,
    whole letter types are deleted in descending probability (vowels first on
    ties); a deletion is skipped if it would empty the word, hit a form already
    assigned, or hit another word's unreduced spelling.  The last condition
    guarantees every later word can at worst keep its own spelling.
    """
    words = list(dict.fromkeys(vocab))
    originals = set(words)
    allowed = None if deletable is None else set(deletable)
    taken: set[str] = set()
    out = {}
    for w in words:
        current = w
        for letter in _deletion_order(w, dist):
            if allowed is not None and letter not in allowed:
                continue
            cand = current.replace(letter, "")
            if cand and cand not in taken and cand not in originals:
                current = cand
        taken.add(current)
        out[w] = ReducedWord(w, current)
    return out


def reduce_word(word, vocab, dist, deletable=None) -> ReducedWord:
    """Reduce one word; see :func:`reduce_vocabulary` for batch use."""
    table = reduce_vocabulary(vocab, dist, deletable)
    if word not in table:
        raise CodecError(f"{word!r} is not in the vocabulary")
    return table[word]


# ------------------------------------------------------ character n-grams


@dataclass(frozen=True)
class CharNGramModel:
    order: int
    cond: Mapping[str, Mapping[str, float]]

    def prob(self, context: str, symbol: str) -> float:
        return self.cond.get(context, {}).get(symbol, 0.0)

    def to_tsv(self) -> str:
        lines = []
        for ctx in sorted(self.cond):
            for sym, p in sorted(self.cond[ctx].items()):
                lines.append(f"{ctx}\t{sym}\t{p:.9f}\n")
        return "".join(lines)


def char_ngram_model(corpus: Corpus, n: int, mark_end: bool = False) -> CharNGramModel:
    """Conditional letter model P(next | previous n-1 letters).

    Each word is left-padded with ``^``.  The end marker ``$`` is only
    predicted when ``mark_end`` is set.
    """
    if n not in (2, 3):
        raise CodecError(f"n-gram order must be 2 or 3, got {n}")
    words = _words(corpus)
    if not words:
        raise CodecError("empty corpus")
    counts: dict[str, Counter] = defaultdict(Counter)
    for w in words:
        if SENTINELS & set(w):
            raise CodecError(f"reserved sentinel in {w!r}")
        padded = START * (n - 1) + w + (END if mark_end else "")
        for i in range(n - 1, len(padded)):
            counts[padded[i - n + 1:i]][padded[i]] += 1
    cond = {}
    for ctx, c in counts.items():
        total = sum(c.values())
        cond[ctx] = {s: k / total for s, k in c.items()}
    return CharNGramModel(n, cond)
