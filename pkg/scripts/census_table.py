"""Print subgroup counts of F_n by degree: census totals, normal ones, and
unpointed classes, next to the value from Hall's recursion."""

import argparse
import time
from math import factorial

from liftcover.census import CensusQuery, enumerate_covers


def hall(n, dmax):
    a = []
    for d in range(1, dmax + 1):
        a.append(d * factorial(d) ** (n - 1) - sum(factorial(d - k) ** (n - 1) * a[k - 1] for k in range(1, d)))
    return a


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=2)
    ap.add_argument("--dmax", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    expected = hall(args.n, args.dmax)
    print(f"{'d':>3} {'pointed':>9} {'hall':>9} {'normal':>7} {'classes':>8} {'secs':>6}")
    for d in range(1, args.dmax + 1):
        t0 = time.perf_counter()
        pointed = enumerate_covers(CensusQuery(args.n, d, max_tuples=10**12), jobs=args.jobs)
        normal = enumerate_covers(CensusQuery(args.n, d, require_normal=True, max_tuples=10**12), jobs=args.jobs)
        classes = enumerate_covers(CensusQuery(args.n, d, up_to_iso=True, max_tuples=10**12), jobs=args.jobs)
        secs = time.perf_counter() - t0
        flag = "" if len(pointed) == expected[d - 1] else "  MISMATCH"
        print(f"{d:>3} {len(pointed):>9} {expected[d - 1]:>9} {len(normal):>7} {len(classes):>8} {secs:>6.1f}{flag}")


if __name__ == "__main__":
    main()
