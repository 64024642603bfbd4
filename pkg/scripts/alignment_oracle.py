"""Compare the bigram aligner (exhaustive and greedy) with the brute-force oracle."""
import argparse
import random
import time

from interlingua_mt import fixtures
from interlingua_mt.aligner import align_by_bigrams, align_oracle, build_bigram_model
from interlingua_mt.corpus import read_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    src = read_corpus(fixtures.SOURCE_CORPUS)
    tgt = read_corpus(fixtures.TARGET_CORPUS)
    sm, tm = build_bigram_model(src), build_bigram_model(tgt)
    src_vocab, tgt_vocab = sorted(sm.vocabulary), sorted(tm.vocabulary)
    rng = random.Random(args.seed)

    same_cost = same_links = 0
    greedy_gap = 0.0
    t_exh = t_orc = 0.0
    for _ in range(args.pairs):
        s = rng.choices(src_vocab, k=rng.randint(1, args.max_len))
        t = rng.choices(tgt_vocab, k=rng.randint(1, args.max_len))
        t0 = time.perf_counter()
        exh = align_by_bigrams(s, t, sm, tm, mode="exhaustive")
        t1 = time.perf_counter()
        orc = align_oracle(s, t, sm, tm)
        t2 = time.perf_counter()
        greedy = align_by_bigrams(s, t, sm, tm, mode="greedy")
        t_exh += t1 - t0
        t_orc += t2 - t1
        same_cost += exh.cost == orc.cost
        same_links += exh.alignment == orc.alignment
        greedy_gap += greedy.cost - orc.cost

    print(f"pairs: {args.pairs} (up to {args.max_len} tokens per side)")
    print(f"exhaustive cost == oracle cost: {same_cost}/{args.pairs}")
    print(f"exhaustive links == oracle links: {same_links}/{args.pairs}")
    print(f"mean greedy excess cost: {greedy_gap / args.pairs:.4f} bits")
    print(f"time exhaustive {t_exh:.2f}s, oracle {t_orc:.2f}s")

    print("bundled bitext:")
    for s, t in zip(src, tgt):
        res = align_by_bigrams(s, t, sm, tm)
        print(f"  {' '.join(s.words)} ||| {' '.join(t.words)} ||| {res.alignment.pharaoh()}")


if __name__ == "__main__":
    main()
