"""Huffman expected length against entropy on random and corpus distributions."""
import argparse
import math
import random

from interlingua_mt import fixtures
from interlingua_mt.codec import SymbolDistribution, build_codebook, entropy, letter_frequencies
from interlingua_mt.corpus import read_corpus


def random_distribution(rng, size):
    weights = [rng.random() ** rng.choice((1, 3, 8)) + 1e-6 for _ in range(size)]
    total = math.fsum(weights)
    return SymbolDistribution({chr(0x41 + i): w / total for i, w in enumerate(weights)})


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    worst = 0.0
    redundancy = []
    for _ in range(args.trials):
        dist = random_distribution(rng, rng.randint(3, 30))
        h = entropy(dist)
        length = build_codebook(dist).expected_length(dist)
        assert h <= length + 1e-9 and length < h + 1
        worst = max(worst, length - h)
        redundancy.append(length - h)
    print(f"random distributions: {args.trials}")
    print(f"mean redundancy (L - H): {sum(redundancy) / len(redundancy):.4f} bits")
    print(f"worst redundancy: {worst:.4f} bits")

    dist = letter_frequencies(read_corpus(fixtures.SOURCE_CORPUS))
    cb = build_codebook(dist)
    print(f"corpus alphabet: {len(dist.probs)} letters")
    print(f"corpus entropy: {entropy(dist):.4f} bits/letter")
    print(f"corpus Huffman length: {cb.expected_length(dist):.4f} bits/letter")
    print(f"fixed-length code: {math.ceil(math.log2(len(dist.probs)))} bits/letter")


if __name__ == "__main__":
    main()
