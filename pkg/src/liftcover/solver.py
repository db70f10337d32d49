"""For a word and a prime p, construct a p-sheeted normal cover it lifts to.

Odd p = 2m - 1 rests on the integer lemma: for any a, b one of

    a = 0,   b = 0,   a*x + b = 0,   a*x = b          (mod p)

holds with 1 <= x <= m - 1.  With a, b the exponent sums of a_u, a_v the four
cases select M(u), M(v), an N-family or an M-family cover.  p = 2 uses the
parity split between L(u), L(v) and L2(u, v).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple, Union

from liftcover.cover import CoverGraph, is_connected, is_normal, lift_check
from liftcover.errors import InconsistencyError, PreconditionError
from liftcover.families import FamilySpec, all_specs, build_cover, criterion, criterion_from_sums
from liftcover.words import FreeWord, exponent_sums

A_ZERO = "A_ZERO"
B_ZERO = "B_ZERO"
AX_PLUS_B = "AX_PLUS_B"
AX_EQ_B = "AX_EQ_B"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def mod_inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    r0, r1 = a % p, p
    s0, s1 = 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise ValueError(f"{a} is not invertible modulo {p}")
    return s0 % p


@dataclass(frozen=True)
class LemmaCase:
    case_id: str
    p: int
    a: int
    b: int
    x: Optional[int] = None

    @property
    def m(self) -> int:
        return (self.p + 1) // 2

    def holds(self) -> bool:
        """Re-check the condition by direct modular arithmetic."""
        a, b, p, x = self.a, self.b, self.p, self.x
        if self.case_id == A_ZERO:
            return a % p == 0 and x is None
        if self.case_id == B_ZERO:
            return b % p == 0 and x is None
        if x is None or not 1 <= x <= self.m - 1:
            return False
        if self.case_id == AX_PLUS_B:
            return (a * x + b) % p == 0
        if self.case_id == AX_EQ_B:
            return (a * x - b) % p == 0
        return False


def solve_lemma(a: int, b: int, p: int) -> LemmaCase:
    if p < 3 or not is_prime(p):
        raise PreconditionError(f"p must be an odd prime, got {p}")
    if a % p == 0:
        return LemmaCase(A_ZERO, p, a, b)
    if b % p == 0:
        return LemmaCase(B_ZERO, p, a, b)
    k = (-mod_inverse(a, p) * b) % p
    m = (p + 1) // 2
    if k <= m - 1:
        return LemmaCase(AX_PLUS_B, p, a, b, k)
    return LemmaCase(AX_EQ_B, p, a, b, p - k)


@dataclass(frozen=True)
class SolverResult:
    spec: FamilySpec
    cover: CoverGraph
    pair: Tuple[int, int]
    lemma: Union[LemmaCase, str]

    @property
    def p(self) -> int:
        return self.cover.degree


def _check_inputs(w: FreeWord, p: int, pair) -> Tuple[int, int]:
    if w.n < 2:
        raise PreconditionError("prime covers need rank n >= 2 (in F_1 a word lifts only when p divides it)")
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    u, v = pair if pair is not None else (1, 2)
    if u == v or not (1 <= u <= w.n and 1 <= v <= w.n):
        raise PreconditionError(f"pair must be two distinct generators in 1..{w.n}, got {(u, v)}")
    return u, v


def choose_spec(n: int, sums, p: int, u: int, v: int) -> Tuple[FamilySpec, Union[LemmaCase, str]]:
    """The family picked for exponent sums ``sums`` (0-based by generator)."""
    a, b = sums[u - 1], sums[v - 1]
    if p == 2:
        if a % 2 == 0:
            return FamilySpec.L(n, u), f"o(a{u}) = {a} is even"
        if b % 2 == 0:
            return FamilySpec.L(n, v), f"o(a{v}) = {b} is even"
        return FamilySpec.L2(n, u, v), f"o(a{u}) + o(a{v}) = {a + b} is even"
    case = solve_lemma(a, b, p)
    if case.case_id == A_ZERO:
        return FamilySpec.M(n, p, u), case
    if case.case_id == B_ZERO:
        return FamilySpec.M(n, p, v), case
    if case.case_id == AX_PLUS_B:
        options = (FamilySpec.Nuv(n, p, u, v, case.x), FamilySpec.Nvu(n, p, u, v, case.x))
    else:
        options = (FamilySpec.Muv(n, p, u, v, case.x), FamilySpec.Mvu(n, p, u, v, case.x))
    for spec in options:
        if criterion_from_sums(sums, spec):
            return spec, case
    raise InconsistencyError(f"lemma case {case} matched neither of {options}")


@lru_cache(maxsize=4096)
def _certified_cover(spec: FamilySpec) -> CoverGraph:
    cover = build_cover(spec)
    if not (is_connected(cover) and is_normal(cover)):
        raise InconsistencyError(f"{spec} built a cover that is not connected and normal")
    return cover


def find_prime_normal_cover(w: FreeWord, p: int, pair: Optional[Tuple[int, int]] = None) -> SolverResult:
    u, v = _check_inputs(w, p, pair)
    spec, why = choose_spec(w.n, exponent_sums(w).sums, p, u, v)
    cover = _certified_cover(spec)
    if cover.degree != p or not criterion(w, spec) or not lift_check(w, cover).closed:
        raise InconsistencyError(f"{w} was assigned {spec} but does not lift to it")
    return SolverResult(spec, cover, (u, v), why)


def enumerate_solutions(w: FreeWord, p: int, pair: Optional[Tuple[int, int]] = None) -> list[FamilySpec]:
    """Every family cover over the pair, of degree p, to which ``w`` lifts."""
    u, v = _check_inputs(w, p, pair)
    return [s for s in all_specs(w.n, p, pairs=[(u, v)]) if criterion(w, s)]
