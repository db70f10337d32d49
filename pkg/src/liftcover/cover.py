"""Finite covers of the bouquet of n circles as permutation tuples.

A degree-l cover is one permutation of the sheets {0..l-1} per generator:
``perms[i][s]`` is the head of the a_{i+1}-edge leaving sheet ``s``.  Each
permutation being a bijection is exactly the in/out-degree-one condition on
colored edges.  Vertex v_i in 1-based naming is sheet ``i - 1``.

Lifting a word from a sheet is path lifting: apply the block permutations
left to right, raising each to its block exponent by repeated squaring.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from liftcover.errors import DisconnectedCoverError, InvalidCoverError, RankMismatchError
from liftcover.words import FreeWord

Perm = Tuple[int, ...]


# -- permutation helpers ----------------------------------------------------

def identity_perm(l: int) -> Perm:
    return tuple(range(l))


def shift_perm(l: int, k: int) -> Perm:
    """s -> s + k (mod l)."""
    return tuple((s + k) % l for s in range(l))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` first, then ``q``."""
    return tuple(q[x] for x in p)


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for s, t in enumerate(p):
        inv[t] = s
    return tuple(inv)


def perm_power(p: Perm, e: int) -> Perm:
    if e < 0:
        p, e = perm_inverse(p), -e
    result = identity_perm(len(p))
    while e:
        if e & 1:
            result = perm_compose(result, p)
        p = perm_compose(p, p)
        e >>= 1
    return result


def perm_from_cycles(l: int, cycles: str) -> Perm:
    """Parse cycle notation like ``"(0 1)(2)"`` on sheets 0..l-1."""
    perm = list(range(l))
    for chunk in cycles.replace(")", "").split("("):
        pts = [int(x) for x in chunk.replace(",", " ").split()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    if sorted(perm) != list(range(l)):
        raise InvalidCoverError(f"{cycles!r} is not a permutation of {l} points")
    return tuple(perm)


def is_bijection(p: Sequence[int], l: int) -> bool:
    return len(p) == l and sorted(p) == list(range(l))


# -- covers -----------------------------------------------------------------

@dataclass(frozen=True)
class CoverGraph:
    n: int
    degree: int
    perms: Tuple[Perm, ...]
    base: int = 0

    def __post_init__(self):
        if self.n < 1 or self.degree < 1:
            raise InvalidCoverError("rank and degree must be positive")
        perms = tuple(tuple(int(x) for x in p) for p in self.perms)
        if len(perms) != self.n:
            raise InvalidCoverError(f"expected {self.n} permutations, got {len(perms)}")
        for i, p in enumerate(perms):
            if not is_bijection(p, self.degree):
                raise InvalidCoverError(f"perms[{i}] = {list(p)} is not a bijection of {self.degree} sheets")
        if not 0 <= self.base < self.degree:
            raise InvalidCoverError(f"base {self.base} out of range")
        object.__setattr__(self, "perms", perms)

    @classmethod
    def from_cycles(cls, n: int, degree: int, cycles: Sequence[str], base: int = 0) -> "CoverGraph":
        return cls(n, degree, tuple(perm_from_cycles(degree, c) for c in cycles), base)

    @classmethod
    def trivial(cls, n: int) -> "CoverGraph":
        return cls(n, 1, ((0,),) * n)

    @cached_property
    def inverse_perms(self) -> Tuple[Perm, ...]:
        return tuple(perm_inverse(p) for p in self.perms)

    def with_base(self, base: int) -> "CoverGraph":
        return CoverGraph(self.n, self.degree, self.perms, base)

    def key(self) -> Tuple[int, ...]:
        """Flattened one-line notation; the lexicographic enumeration order."""
        return tuple(x for p in self.perms for x in p)


@dataclass(frozen=True)
class LiftReport:
    closed: bool
    start: int
    end_sheet: int
    visited_path: Optional[Tuple[Tuple[int, int, int], ...]] = field(default=None, compare=False)


def word_perm(w: FreeWord, c: CoverGraph) -> Perm:
    """Permutation of the sheets induced by following ``w`` from every sheet."""
    _check(w, c)
    result = identity_perm(c.degree)
    for g, m in w.blocks:
        result = perm_compose(result, perm_power(c.perms[g - 1], m))
    return result


def lift_check(w: FreeWord, c: CoverGraph, start: Optional[int] = None, trace: bool = False) -> LiftReport:
    """Lift ``w`` to ``c`` starting at sheet ``start`` (default: the base).

    With ``trace=True`` the lifted path is recorded edge by edge as
    ``(sheet, generator, direction)`` triples; only sensible for short words.
    """
    _check(w, c)
    s0 = c.base if start is None else start
    if not 0 <= s0 < c.degree:
        raise ValueError(f"start sheet {s0} out of range for degree {c.degree}")
    s = s0
    path = [] if trace else None
    for g, m in w.blocks:
        if trace:
            table = c.perms[g - 1] if m > 0 else c.inverse_perms[g - 1]
            step = 1 if m > 0 else -1
            for _ in range(abs(m)):
                path.append((s, g, step))
                s = table[s]
        else:
            s = perm_power(c.perms[g - 1], m)[s]
    return LiftReport(s == s0, s0, s, tuple(path) if trace else None)


def _check(w: FreeWord, c: CoverGraph) -> None:
    if w.n != c.n:
        raise RankMismatchError(f"word has rank {w.n} but cover has {c.n} colors")


def is_connected(c: CoverGraph) -> bool:
    return len(_bfs_order(c, 0)) == c.degree


def _bfs_order(c: CoverGraph, root: int) -> List[int]:
    seen = [False] * c.degree
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        s = queue.popleft()
        for p, q in zip(c.perms, c.inverse_perms):
            for t in (p[s], q[s]):
                if not seen[t]:
                    seen[t] = True
                    order.append(t)
                    queue.append(t)
    return order


def standardize(c: CoverGraph, base: Optional[int] = None) -> CoverGraph:
    """Relabel sheets in first-visit order from ``base``; the result has base 0.

    Visiting order is sheet by sheet, and within a sheet a1, a1^-1, a2, ...
    Two connected pointed covers are isomorphic (by a color-preserving map
    sending base to base) iff their standardizations are equal.
    """
    b = c.base if base is None else base
    label = [-1] * c.degree
    label[b] = 0
    order = [b]
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for p, q in zip(c.perms, c.inverse_perms):
            for t in (p[s], q[s]):
                if label[t] < 0:
                    label[t] = len(order)
                    order.append(t)
    if len(order) != c.degree:
        raise DisconnectedCoverError("standard form needs a connected cover")
    perms = tuple(tuple(label[p[s]] for s in order) for p in c.perms)
    return CoverGraph(c.n, c.degree, perms, 0)


def is_normal(c: CoverGraph) -> bool:
    """True iff color-preserving automorphisms act transitively on the sheets.

    A deck transformation taking the base to ``s`` exists exactly when the
    cover re-based at ``s`` is isomorphic to the cover based at the base.
    """
    if not is_connected(c):
        raise DisconnectedCoverError("normality is only defined for connected covers")
    ref = standardize(c, c.base)
    return all(standardize(c, s) == ref for s in range(c.degree) if s != c.base)


def deck_transformation(c: CoverGraph, target: int) -> Optional[Perm]:
    """The unique automorphism sending the base to ``target``, if any."""
    phi = [-1] * c.degree
    phi[c.base] = target
    queue = deque([c.base])
    while queue:
        s = queue.popleft()
        for p, q in zip(c.perms, c.inverse_perms):
            for table in (p, q):
                t, img = table[s], table[phi[s]]
                if phi[t] < 0:
                    phi[t] = img
                    queue.append(t)
                elif phi[t] != img:
                    return None
    if -1 in phi or sorted(phi) != list(range(c.degree)):
        return None
    return tuple(phi)


def schreier_generators(c: CoverGraph) -> List[FreeWord]:
    """Free generators of the subgroup of words that lift to loops at the base."""
    if not is_connected(c):
        raise DisconnectedCoverError("schreier generators need a connected cover")
    # spanning tree paths from the base, as signed letter lists
    path: dict[int, list[int]] = {c.base: []}
    tree_edges = set()
    queue = deque([c.base])
    while queue:
        s = queue.popleft()
        for i, (p, q) in enumerate(zip(c.perms, c.inverse_perms)):
            if p[s] not in path:
                path[p[s]] = path[s] + [i + 1]
                tree_edges.add((s, i))
                queue.append(p[s])
            if q[s] not in path:
                path[q[s]] = path[s] + [-(i + 1)]
                tree_edges.add((q[s], i))
                queue.append(q[s])
    gens = []
    for s in range(c.degree):
        for i, p in enumerate(c.perms):
            if (s, i) in tree_edges:
                continue
            letters = path[s] + [i + 1] + [-x for x in reversed(path[p[s]])]
            gens.append(FreeWord.from_letters(c.n, letters))
    return gens


def is_normal_bruteforce(c: CoverGraph) -> bool:
    """Normality by conjugation: x h x^-1 must lift for every generator
    letter x and every Schreier generator h of the base subgroup."""
    hs = schreier_generators(c)
    for i in range(1, c.n + 1):
        for e in (1, -1):
            x = FreeWord(c.n, ((i, e),))
            for h in hs:
                if not lift_check(x * h * x.inverse(), c).closed:
                    return False
    return True


# -- serialization ----------------------------------------------------------

def to_json(c: CoverGraph) -> str:
    return json.dumps({"n": c.n, "degree": c.degree, "base": c.base, "perms": [list(p) for p in c.perms]})


def cover_from_dict(doc: dict) -> CoverGraph:
    try:
        n, degree, perms = int(doc["n"]), int(doc["degree"]), doc["perms"]
        base = int(doc.get("base", 0))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidCoverError(f"malformed cover document: {exc}") from exc
    if not isinstance(perms, list) or not all(isinstance(p, list) for p in perms):
        raise InvalidCoverError("perms must be a list of integer lists")
    return CoverGraph(n, degree, tuple(tuple(p) for p in perms), base)


def from_json(text: str) -> CoverGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidCoverError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidCoverError("cover document must be a JSON object")
    return cover_from_dict(doc)


_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gray", "gold"]


def to_dot(c: CoverGraph, name: str = "cover") -> str:
    lines = [f"digraph {name} {{"]
    for s in range(c.degree):
        shape = "doublecircle" if s == c.base else "circle"
        lines.append(f'  v{s + 1} [label="v{s + 1}", shape={shape}];')
    for i, p in enumerate(c.perms):
        color = _PALETTE[i % len(_PALETTE)]
        for s, t in enumerate(p):
            lines.append(f'  v{s + 1} -> v{t + 1} [label="a{i + 1}", color={color}, fontcolor={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
