"""Run the exhaustive reduct/base identity checks on random matroids.

    python scripts/run_theorem_suite.py --count 500 --max-n 8 --seed 1
"""

import argparse
import time
from collections import Counter

from matred.dependence import THEOREMS, verify_paper_theorems
from matred.generate import KINDS, matroid_zoo


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    zoo = matroid_zoo(args.seed, args.count, args.max_n, KINDS, min_n=args.min_n)
    holds = Counter()
    per_kind = Counter(M.kind for M in zoo)
    t0 = time.perf_counter()
    for M in zoo:
        for r in verify_paper_theorems(M):
            holds[r.theorem] += r.holds
            if not r.holds:
                print(f"FAIL {r.theorem} on {M!r}: {r.witness}")
    elapsed = time.perf_counter() - t0

    print(f"{len(zoo)} matroids in {elapsed:.1f} s: " + ", ".join(f"{k}={v}" for k, v in sorted(per_kind.items())))
    for name in THEOREMS:
        print(f"  {name:34s} {holds[name]}/{len(zoo)}")


if __name__ == "__main__":
    main()
