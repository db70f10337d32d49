"""Minimal non-lifting degree for a1^2 a2^m over odd m, plus a few other
words for contrast (commutators need degree 3)."""

import argparse

from liftcover.census import min_nonlift_degree, nonlift_family_check
from liftcover.errors import BudgetExceeded
from liftcover.families import identify_family
from liftcover.words import parse_word


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mmax", type=int, default=15)
    ap.add_argument("--dmax", type=int, default=5)
    args = ap.parse_args()

    print("m  r==2  lifts on L:2  cited self-intersection")
    for row in nonlift_family_check(range(1, args.mmax + 1, 2)):
        print(f"{row.m:<3}{str(row.r_is_two):<6}{str(row.lifts_on_L2):<14}{row.cited_self_intersection}")

    print()
    for text in ["a1 a2 a1^-1 a2^-1", "a1^2 a2^2 a1^-2 a2^-2", "a1 a2^2 a1^-1 a2^-2", "a1^3 a2^3"]:
        w = parse_word(text, 2)
        try:
            res = min_nonlift_degree(w, dmax=args.dmax)
        except BudgetExceeded as exc:
            print(f"{text:<24} r > {exc.lower_bound}")
            continue
        name = identify_family(res.witness)
        label = name.text if name else str([list(p) for p in res.witness.perms])
        print(f"{text:<24} r = {res.r}  witness {label}  ({res.covers_checked} covers tried)")


if __name__ == "__main__":
    main()
