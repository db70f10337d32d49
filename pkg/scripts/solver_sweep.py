"""Distribution of solver choices over random words, per prime."""

import argparse
import random
from collections import Counter

from liftcover.cover import lift_check
from liftcover.solver import find_prime_normal_cover
from liftcover.verify import random_word


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=2)
    ap.add_argument("--words", type=int, default=5000)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7, 11, 13])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    words = [random_word(rng, args.n) for _ in range(args.words)]
    for p in args.primes:
        variants = Counter()
        for w in words:
            res = find_prime_normal_cover(w, p)
            assert lift_check(w, res.cover).closed
            variants[res.spec.variant] += 1
        summary = ", ".join(f"{v}: {c}" for v, c in sorted(variants.items()))
        print(f"p={p:<3} {summary}")


if __name__ == "__main__":
    main()
