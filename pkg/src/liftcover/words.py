"""Reduced words in the free group F_n on generators a1..an.

A word is kept as a tuple of exponent blocks ``(g, m)`` with ``g`` the
1-based generator index and ``m`` a nonzero integer, e.g. ``a1^2 a2^-3 a1``
is ``((1, 2), (2, -3), (1, 1))``.  Construction always freely reduces, so two
FreeWords are equal iff they are the same group element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from liftcover.errors import RankMismatchError, WordSyntaxError

Block = Tuple[int, int]

_TERM = re.compile(r"a([1-9][0-9]*)(?:\^(-?[1-9][0-9]*))?")


def reduce_blocks(blocks: Iterable[Block]) -> Tuple[Block, ...]:
    """Free reduction on the block level: merge equal neighbours, drop zeros."""
    stack: list[list[int]] = []
    for g, m in blocks:
        if m == 0:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += m
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, m])
    return tuple((g, m) for g, m in stack)


@dataclass(frozen=True)
class FreeWord:
    n: int
    blocks: Tuple[Block, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be >= 1, got {self.n}")
        blocks = tuple((int(g), int(m)) for g, m in self.blocks)
        for g, _ in blocks:
            if not 1 <= g <= self.n:
                raise ValueError(f"generator a{g} out of range for rank {self.n}")
        object.__setattr__(self, "blocks", reduce_blocks(blocks))

    @classmethod
    def identity(cls, n: int) -> "FreeWord":
        return cls(n, ())

    @classmethod
    def from_letters(cls, n: int, letters: Iterable[int]) -> "FreeWord":
        """Build from signed letters: ``+g`` is a_g, ``-g`` is a_g^-1."""
        return cls(n, tuple((abs(x), 1 if x > 0 else -1) for x in letters))

    def __len__(self):
        return len(self.blocks)

    def __bool__(self):
        return bool(self.blocks)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        _check_rank(self, other)
        return FreeWord(self.n, self.blocks + other.blocks)

    def __pow__(self, e: int) -> "FreeWord":
        if e < 0:
            return self.inverse() ** (-e)
        return FreeWord(self.n, self.blocks * e)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.n, tuple((g, -m) for g, m in reversed(self.blocks)))

    def letter_length(self) -> int:
        return sum(abs(m) for _, m in self.blocks)

    def render(self) -> str:
        return " ".join(f"a{g}" if m == 1 else f"a{g}^{m}" for g, m in self.blocks)

    def __str__(self):
        return self.render() or "1"


@dataclass(frozen=True)
class ExponentVector:
    """Exponent sums; ``sums[i - 1]`` is the total exponent of a_i."""

    n: int
    sums: Tuple[int, ...]

    def __post_init__(self):
        if len(self.sums) != self.n:
            raise ValueError("exponent vector length must equal the rank")

    def __getitem__(self, i):
        return self.sums[i]

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        return ExponentVector(self.n, tuple(a + b for a, b in zip(self.sums, other.sums)))

    def __neg__(self) -> "ExponentVector":
        return ExponentVector(self.n, tuple(-a for a in self.sums))

    def of(self, i: int) -> int:
        """Exponent sum of generator a_i (1-based)."""
        return self.sums[i - 1]


def parse_word(text: str, n: int) -> FreeWord:
    """Parse ``"a1^2 a2^-3 a1"``-style text into a reduced FreeWord.

    Terms are separated by whitespace; no whitespace is allowed around ``^``.
    Leading and trailing whitespace is ignored and the empty string is the
    identity.
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    blocks: list[Block] = []
    pos = len(text) - len(text.lstrip())
    end = len(text.rstrip())
    while pos < end:
        match = _TERM.match(text, pos, end)
        if match is None:
            raise WordSyntaxError(f"expected a term like 'a1' or 'a2^-3', got {text[pos:pos + 8]!r}", pos)
        g = int(match.group(1))
        if g > n:
            raise WordSyntaxError(f"generator a{g} out of range for rank {n}", pos)
        blocks.append((g, int(match.group(2) or 1)))
        pos = match.end()
        if pos < end:
            if text[pos] == "^":
                raise WordSyntaxError("exponent must be a nonzero integer without a sign prefix '+' or leading zeros", pos)
            if not text[pos].isspace():
                raise WordSyntaxError("terms must be separated by whitespace", pos)
            while text[pos].isspace():
                pos += 1
    return FreeWord(n, tuple(blocks))


def exponent_sums(w: FreeWord) -> ExponentVector:
    sums = [0] * w.n
    for g, m in w.blocks:
        sums[g - 1] += m
    return ExponentVector(w.n, tuple(sums))


def block_length(w: FreeWord) -> int:
    """Number of two-syllable blocks ``a_i^p a_j^q``, the last one possibly half."""
    return (len(w.blocks) + 1) // 2


def _check_rank(*items) -> None:
    ranks = {x.n for x in items}
    if len(ranks) > 1:
        raise RankMismatchError(f"rank mismatch: {sorted(ranks)}")


def check_rank(w: FreeWord, n: int) -> None:
    if w.n != n:
        raise RankMismatchError(f"word has rank {w.n}, expected {n}")

