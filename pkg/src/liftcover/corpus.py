"""Exhaustive word corpora and batched path lifting.

The acceptance checks quantify over every reduced word with at most K
syllables and exponents in [-E, E] \\ {0}; for rank 3 that is tens of millions
of words.  Words are generated level by level in numpy arrays, one chunk per
first syllable, and lifted through a finite permutation group: the monodromy
group of a disjoint union of covers.  Each word is mapped to the group element
it induces, so one table lookup per syllable follows the word on every sheet
of every cover at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence

import numpy as np

from liftcover.cover import CoverGraph, perm_inverse
from liftcover.words import FreeWord


class Monodromy:
    """Permutation group generated by a list of covers acting side by side.

    ``closed[e, j]`` tells whether element ``e`` fixes the base of cover ``j``;
    ``uniform[e, j]`` whether it fixes either all or none of cover ``j``'s
    sheets.
    """

    def __init__(self, covers: Sequence[CoverGraph], exps: Sequence[int], max_order: int = 200_000):
        if not covers:
            raise ValueError("need at least one cover")
        n = covers[0].n
        if any(c.n != n for c in covers):
            raise ValueError("covers must share the rank")
        self.n = n
        self.covers = list(covers)
        offsets = np.cumsum([0] + [c.degree for c in covers])
        self.offsets = offsets
        total = int(offsets[-1])
        gens = []
        for i in range(n):
            gens.append(tuple(int(offsets[j]) + x for j, c in enumerate(covers) for x in c.perms[i]))
        moves = []
        for g in gens:
            moves.append(g)
            moves.append(perm_inverse(g))
        ident = tuple(range(total))
        index = {ident: 0}
        elements = [ident]
        step = []
        i = 0
        while i < len(elements):
            x = elements[i]
            row = []
            for mv in moves:
                y = tuple(mv[s] for s in x)
                j = index.get(y)
                if j is None:
                    if len(elements) >= max_order:
                        raise ValueError(f"monodromy group larger than {max_order}")
                    j = index[y] = len(elements)
                    elements.append(y)
                row.append(j)
            step.append(row)
            i += 1
        self.order = len(elements)
        self.elements = np.array(elements, dtype=np.int32)
        step = np.array(step, dtype=np.int32).reshape(self.order, n, 2)
        self.exps = list(exps)
        syl = np.empty((self.order, n, len(self.exps)), dtype=np.int32)
        for g in range(n):
            for t, m in enumerate(self.exps):
                cur = np.arange(self.order)
                for _ in range(abs(m)):
                    cur = step[cur, g, 0 if m > 0 else 1]
                syl[:, g, t] = cur
        self.syllable = syl.reshape(-1)
        bases = np.array([int(offsets[j]) + c.base for j, c in enumerate(covers)])
        self.closed = self.elements[:, bases] == bases[None, :]
        uniform = np.empty((self.order, len(covers)), dtype=bool)
        for j in range(len(covers)):
            lo, hi = int(offsets[j]), int(offsets[j + 1])
            fixed = self.elements[:, lo:hi] == np.arange(lo, hi)[None, :]
            uniform[:, j] = fixed.all(axis=1) | ~fixed.any(axis=1)
        self.uniform = uniform

    def end_sheet(self, e: int, j: int, start: int) -> int:
        """Sheet of cover ``j`` reached from ``start`` by element ``e``."""
        off = int(self.offsets[j])
        return int(self.elements[e, off + start]) - off


@dataclass
class Chunk:
    """All corpus words starting with one fixed syllable.

    ``levels[k]`` holds generator (0-based) and exponent-index arrays of the
    words with k + 1 syllables; the children of word ``i`` on one level are
    ``i * fanout .. (i + 1) * fanout - 1`` on the next.
    """

    corpus: "WordCorpus"
    levels: List[tuple]

    @property
    def size(self) -> int:
        return sum(len(g) for g, _ in self.levels)

    def sums(self, dtype=np.int32) -> np.ndarray:
        exps = np.asarray(self.corpus.exps, dtype=dtype)
        n, fan = self.corpus.n, self.corpus.fanout
        out = []
        prev = None
        for gen, eidx in self.levels:
            cur = np.zeros((len(gen), n), dtype=dtype) if prev is None else np.repeat(prev, fan, axis=0)
            cur[np.arange(len(gen)), gen] += exps[eidx]
            out.append(cur)
            prev = cur
        return np.concatenate(out)

    def keys(self, bound: int) -> np.ndarray:
        """Same values as ``sums_key(self.sums(), bound)``, built level by level."""
        n, ne, fan = self.corpus.n, len(self.corpus.exps), self.corpus.fanout
        base = 2 * bound + 1
        weights = base ** np.arange(n, dtype=np.int64)
        delta = (weights[:, None] * np.asarray(self.corpus.exps, dtype=np.int64)[None, :]).reshape(-1)
        out = []
        prev = np.array([int(weights.sum()) * bound], dtype=np.int64)
        for k, (gen, eidx) in enumerate(self.levels):
            parent = prev if k == 0 else np.repeat(prev, fan)
            cur = parent + delta[gen.astype(np.int64) * ne + eidx]
            out.append(cur)
            prev = cur
        return np.concatenate(out)

    def elements(self, mono: Monodromy) -> np.ndarray:
        n, ne, fan = self.corpus.n, len(self.corpus.exps), self.corpus.fanout
        out = []
        prev = np.zeros(1, dtype=np.int64)
        for k, (gen, eidx) in enumerate(self.levels):
            parent = prev if k == 0 else np.repeat(prev, fan)
            cur = mono.syllable[(parent * n + gen) * ne + eidx]
            out.append(cur)
            prev = cur.astype(np.int64)
        return np.concatenate(out)

    def word(self, flat_index: int) -> FreeWord:
        """Decode position ``flat_index`` of :meth:`sums`/:meth:`elements`."""
        k = 0
        while flat_index >= len(self.levels[k][0]):
            flat_index -= len(self.levels[k][0])
            k += 1
        blocks = []
        idx = flat_index
        for lvl in range(k, -1, -1):
            gen, eidx = self.levels[lvl]
            blocks.append((int(gen[idx]) + 1, self.corpus.exps[int(eidx[idx])]))
            if lvl:
                idx //= self.corpus.fanout
        return FreeWord(self.corpus.n, tuple(reversed(blocks)))


class WordCorpus:
    """Reduced words with at most ``max_syllables`` exponent blocks, each
    exponent a nonzero integer in [-max_abs_exp, max_abs_exp].  The empty
    word is not part of any chunk."""

    def __init__(self, n: int, max_syllables: int, max_abs_exp: int):
        self.n = n
        self.max_syllables = max_syllables
        self.exps = [e for e in range(-max_abs_exp, max_abs_exp + 1) if e]
        self.fanout = (n - 1) * len(self.exps)

    def __len__(self):
        ne = len(self.exps)
        return 1 + sum(self.n * ne * self.fanout ** (k - 1) for k in range(1, self.max_syllables + 1))

    def chunks(self) -> Iterator[Chunk]:
        n, ne = self.n, len(self.exps)
        child_gen = np.repeat(np.arange(n - 1, dtype=np.int8), ne)
        child_exp = np.tile(np.arange(ne, dtype=np.int8), n - 1)
        for g0 in range(n):
            for e0 in range(ne):
                gen = np.array([g0], dtype=np.int8)
                eidx = np.array([e0], dtype=np.int8)
                levels = [(gen, eidx)]
                for _ in range(1, self.max_syllables):
                    if n == 1:
                        break
                    j = np.tile(child_gen, len(gen))
                    pg = np.repeat(gen, self.fanout)
                    gen = (j + (j >= pg)).astype(np.int8)
                    eidx = np.tile(child_exp, len(levels[-1][0]))
                    levels.append((gen, eidx))
                yield Chunk(self, levels)

    def words(self) -> Iterator[FreeWord]:
        """Plain iteration; only sensible for small corpora."""
        yield FreeWord.identity(self.n)
        for chunk in self.chunks():
            for i in range(chunk.size):
                yield chunk.word(i)


def sums_key(sums: np.ndarray, bound: int) -> np.ndarray:
    """Pack rows of exponent sums with entries in [-bound, bound] into int64."""
    base = 2 * bound + 1
    key = np.zeros(len(sums), dtype=np.int64)
    for i in range(sums.shape[1] - 1, -1, -1):
        key = key * base + (sums[:, i].astype(np.int64) + bound)
    return key


def unpack_sums(keys: np.ndarray, n: int, bound: int) -> np.ndarray:
    base = 2 * bound + 1
    out = np.empty((len(keys), n), dtype=np.int64)
    rest = keys.astype(np.int64)
    for i in range(n):
        out[:, i] = rest % base - bound
        rest = rest // base
    return out
