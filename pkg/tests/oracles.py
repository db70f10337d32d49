"""Independent reference values used by the census tests."""

from math import factorial


def hall_subgroup_counts(n, dmax):
    """Number of index-d subgroups of F_n for d = 1..dmax, by Hall's recursion."""
    a = {}
    for d in range(1, dmax + 1):
        a[d] = d * factorial(d) ** (n - 1) - sum(factorial(d - k) ** (n - 1) * a[k] for k in range(1, d))
    return [a[d] for d in range(1, dmax + 1)]


def brute_force_transitive(n, d):
    """Count transitive n-tuples of permutations of d points by enumeration."""
    from itertools import permutations, product

    count = 0
    for perms in product(permutations(range(d)), repeat=n):
        seen = {0}
        stack = [0]
        while stack:
            s = stack.pop()
            for p in perms:
                for t in (p[s], p.index(s)):
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
        count += len(seen) == d
    return count
