"""Exhaustive enumeration of small covers and the minimal non-lifting degree.

Connected pointed covers of degree d correspond one-to-one to index-d
subgroups of F_n.  They are generated directly in standard form (sheets
numbered in first-visit order from the base) by the usual low-index
backtracking, so each subgroup appears exactly once.  Disconnected covers
are only reachable by brute force over all permutation tuples.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional

from liftcover.cover import CoverGraph, is_connected, is_normal, lift_check, standardize
from liftcover.errors import BudgetExceeded, PreconditionError
from liftcover.families import FamilySpec, build_cover
from liftcover.words import FreeWord

DEFAULT_MAX_TUPLES = 10**8
DEFAULT_DMAX = 6


@dataclass(frozen=True)
class CensusQuery:
    n: int
    degree: int
    require_connected: bool = True
    require_normal: bool = False
    up_to_iso: bool = False
    max_tuples: int = DEFAULT_MAX_TUPLES

    def __post_init__(self):
        if self.n < 1 or self.degree < 1:
            raise PreconditionError("census needs n >= 1 and degree >= 1")

    @property
    def tuple_count(self) -> int:
        return math.factorial(self.degree) ** self.n


# -- connected covers: standard coset tables --------------------------------

def _first_open_slot(fwd, bwd, used, n):
    for s in range(used):
        for i in range(n):
            if fwd[i][s] < 0:
                return s, i, True
            if bwd[i][s] < 0:
                return s, i, False
    return None


def _expand(state, n, d):
    """Children of a partial table: every legal value for its first open slot."""
    fwd, bwd, used = state
    slot = _first_open_slot(fwd, bwd, used, n)
    if slot is None:
        return None
    s, i, forward = slot
    dst = bwd if forward else fwd
    targets = [t for t in range(used) if dst[i][t] < 0]
    if used < d:
        targets.append(used)
    children = []
    for t in targets:
        f = [row[:] for row in fwd]
        b = [row[:] for row in bwd]
        a, c = (f, b) if forward else (b, f)
        a[i][s] = t
        c[i][t] = s
        children.append((f, b, max(used, t + 1)))
    return children


def _search(state, n, d, out):
    fwd, bwd, used = state
    slot = _first_open_slot(fwd, bwd, used, n)
    if slot is None:
        if used == d:
            out.append(tuple(tuple(row) for row in fwd))
        return
    s, i, forward = slot
    src, dst = (fwd, bwd) if forward else (bwd, fwd)
    for t in range(min(used + 1, d)):
        if dst[i][t] >= 0:
            continue
        src[i][s] = t
        dst[i][t] = s
        _search((fwd, bwd, max(used, t + 1)), n, d, out)
        src[i][s] = -1
        dst[i][t] = -1


def _search_root(args):
    state, n, d = args
    out: list = []
    _search(state, n, d, out)
    return out


def standard_tables(n: int, d: int, jobs: int = 1) -> List[tuple]:
    """All transitive n-tuples of permutations of {0..d-1} in standard form,
    sorted lexicographically.  Equivalently: all index-d subgroups of F_n."""
    root = ([[-1] * d for _ in range(n)], [[-1] * d for _ in range(n)], 1)
    if jobs <= 1:
        tables = _search_root((root, n, d))
    else:
        frontier = [root]
        while 0 < len(frontier) < 4 * jobs:
            nxt = []
            for st in frontier:
                kids = _expand(st, n, d)
                if kids is None:
                    nxt.append(st)
                else:
                    nxt.extend(kids)
            if nxt == frontier:
                break
            frontier = nxt
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            tables = [t for part in pool.map(_search_root, [(st, n, d) for st in frontier]) for t in part]
    return sorted(tables, key=lambda perms: tuple(x for p in perms for x in p))


# -- brute force over all tuples --------------------------------------------

def all_tuples(n: int, d: int) -> Iterator[tuple]:
    """Every n-tuple of permutations of {0..d-1}, lexicographic."""
    return itertools.product(itertools.permutations(range(d)), repeat=n)


def _relabel(perms, sigma):
    """Apply the sheet relabeling s -> sigma[s]."""
    d = len(sigma)
    out = []
    for p in perms:
        q = [0] * d
        for s in range(d):
            q[sigma[s]] = sigma[p[s]]
        out.append(tuple(q))
    return tuple(out)


def _lexmin_relabeling(perms, d, fix_base):
    best = None
    for rest in itertools.permutations(range(1, d) if fix_base else range(d)):
        sigma = (0,) + rest if fix_base else rest
        cand = _relabel(perms, sigma)
        key = tuple(x for p in cand for x in p)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def _iso_key(c: CoverGraph):
    """Invariant of the cover up to color-preserving isomorphism, base ignored."""
    if is_connected(c):
        return min(standardize(c, s).key() for s in range(c.degree))
    return tuple(x for p in _lexmin_relabeling(c.perms, c.degree, False) for x in p)


def enumerate_covers(q: CensusQuery, jobs: int = 1) -> List[CoverGraph]:
    """Covers of degree ``q.degree`` with base sheet 0.

    One representative per pointed isomorphism class (a relabeling fixing the
    base), or per unpointed class when ``q.up_to_iso``.  Results follow the
    lexicographic order of their flattened permutation tuples.
    """
    if q.tuple_count > q.max_tuples:
        raise BudgetExceeded(
            f"{q.tuple_count} permutation tuples for n={q.n}, d={q.degree} exceeds the budget {q.max_tuples}",
            lower_bound=q.degree - 1,
        )
    connected_only = q.require_connected or q.require_normal
    if connected_only:
        covers = [CoverGraph(q.n, q.degree, perms) for perms in standard_tables(q.n, q.degree, jobs)]
        if q.require_normal:
            covers = [c for c in covers if is_normal(c)]
    else:
        seen = set()
        covers = []
        for perms in all_tuples(q.n, q.degree):
            rep = _lexmin_relabeling(perms, q.degree, True)
            if rep not in seen:
                seen.add(rep)
                covers.append(CoverGraph(q.n, q.degree, rep))
        covers.sort(key=CoverGraph.key)
    if q.up_to_iso:
        reps = {}
        for c in covers:
            reps.setdefault(_iso_key(c), c)
        covers = sorted(reps.values(), key=CoverGraph.key)
    return covers


def count_index2(n: int) -> int:
    """Number of connected 2-sheeted covers: one per nonzero vector in (Z/2)^n."""
    if n < 1:
        raise PreconditionError("rank must be >= 1")
    return 2**n - 1


# -- minimal non-lifting degree ---------------------------------------------

@dataclass(frozen=True)
class RminResult:
    r: Optional[int]
    witness: Optional[CoverGraph]
    covers_checked: int = 0


def min_nonlift_degree(w: FreeWord, dmax: int = DEFAULT_DMAX, max_tuples: int = DEFAULT_MAX_TUPLES,
                       jobs: int = 1) -> RminResult:
    """Smallest degree of a connected cover that ``w`` fails to lift to.

    Every connected pointed cover of each degree is tried from its base, in
    lexicographic order, so the witness is the first failing one.  Raises
    BudgetExceeded (carrying the proven lower bound r > bound) when no
    failure exists up to ``dmax`` or the tuple budget stops the search.
    """
    if dmax < 2:
        raise PreconditionError("dmax must be >= 2")
    if not w:
        return RminResult(None, None, 0)
    checked = 0
    for d in range(2, dmax + 1):
        covers = enumerate_covers(CensusQuery(w.n, d, max_tuples=max_tuples), jobs=jobs)
        for c in covers:
            checked += 1
            if not lift_check(w, c).closed:
                return RminResult(d, c, checked)
    raise BudgetExceeded(f"{w} lifts to every connected cover of degree <= {dmax}", lower_bound=dmax)


@dataclass(frozen=True)
class NonliftRow:
    m: int
    r_is_two: bool
    lifts_on_L2: bool
    cited_self_intersection: int


def nonlift_family_check(m_values) -> List[NonliftRow]:
    """Rows for the words a1^2 a2^m (m odd): they never lift to L(2), so the
    minimal non-lifting degree is 2, while their self-intersection number is
    m - 1.  That last value is quoted from the literature, not computed."""
    rows = []
    l2 = build_cover(FamilySpec.L(2, 2))
    for m in m_values:
        if m < 1 or m % 2 == 0:
            raise PreconditionError(f"m must be a positive odd integer, got {m}")
        w = FreeWord(2, ((1, 2), (2, m)))
        res = min_nonlift_degree(w, dmax=2)
        rows.append(NonliftRow(m, res.r == 2, lift_check(w, l2).closed, m - 1))
    return rows
