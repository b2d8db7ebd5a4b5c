"""Run the three-way norm comparison over many seeds and tally the norms seen.

    python scripts/oracle_sweep.py --seeds 20 --trials 500 --max-len 14
"""

import argparse
import random
from collections import Counter

from chinese_rings.connection import INFINITY, brute_force_norm, min_norm, subset_oracle
from chinese_rings.norm import oracle_sample_word
from chinese_rings.words import format_word


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--max-len", type=int, default=14)
    args = ap.parse_args()
    seen = Counter()
    for seed in range(args.seeds):
        rng = random.Random(seed)
        for _ in range(args.trials):
            w = oracle_sample_word(rng, args.max_len)
            dp = min_norm(w, 3).value
            enum, sub = brute_force_norm(w, 3), subset_oracle(w, 3)
            if not dp == enum == sub:
                raise SystemExit(f"seed {seed}: {format_word(w)} dp={dp} enum={enum} subset={sub}")
            seen["inf" if dp == INFINITY else dp] += 1
    print(f"{args.seeds * args.trials} words, all three methods agree")
    for k in sorted(seen, key=lambda v: (isinstance(v, str), v)):
        print(f"  norm {k}: {seen[k]}")


if __name__ == "__main__":
    main()
