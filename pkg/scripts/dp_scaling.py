"""Time the DP on a_n * a_{n-1}^-1 past the n = 8 range used by `verify`.

    python scripts/dp_scaling.py --max-n 10
"""

import argparse
import time

from chinese_rings import arc_word, complexity, metric, verify_witness, EMPTY


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    print(f"{'n':>3} {'L':>6} {'metric':>7} {'2^(n-1)':>8} {'witness':>8} {'sec':>8}")
    for n in range(2, args.max_n + 1):
        t0 = time.perf_counter()
        r = metric(arc_word(n), arc_word(n - 1), n)
        dt = time.perf_counter() - t0
        ok = verify_witness(r.word, r.witness_ops, EMPTY, n)
        print(f"{n:>3} {len(r.word):>6} {r.value:>7} {complexity(n):>8} {str(ok):>8} {dt:>8.3f}")


if __name__ == "__main__":
    main()
