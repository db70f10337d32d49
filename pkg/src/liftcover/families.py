"""Named normal cover families and their closed-form lifting criteria.

Degree-2 families (any n):

    L(i)       a_i swaps the two sheets, every other generator is trivial
    L2(i, j)   a_i and a_j both swap the sheets

Odd degree l = 2m - 1, with 1 <= k <= m - 1 (unnamed generators trivial):

    M(u)          a_u: s -> s+1
    Muv(u, v, k)  a_u: s -> s+1,  a_v: s -> s-k   (opposite directions)
    Nuv(u, v, k)  a_u: s -> s+1,  a_v: s -> s+k   (same direction)
    Mvu(u, v, k)  a_v: s -> s+1,  a_u: s -> s-k
    Nvu(u, v, k)  a_v: s -> s+1,  a_u: s -> s+k

Since every generator acts by a rotation, a word lifts iff its net rotation is
zero, which gives the congruences in :func:`criterion_from_sums`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from liftcover.cover import CoverGraph, identity_perm, shift_perm
from liftcover.errors import FamilySpecError
from liftcover.words import FreeWord, check_rank, exponent_sums

VARIANTS = ("L", "L2", "M", "Muv", "Nuv", "Mvu", "Nvu")
_PAIRED = ("Muv", "Nuv", "Mvu", "Nvu")


@dataclass(frozen=True)
class FamilySpec:
    """One named family member.  For ``L``/``L2`` the fields ``u``/``v`` hold
    generator indices ``i``/``j``."""

    variant: str
    n: int
    l: int
    u: int
    v: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise FamilySpecError(f"unknown family variant {self.variant!r}")
        idx = [self.u] + ([self.v] if self.v is not None else [])
        if any(not 1 <= i <= self.n for i in idx):
            raise FamilySpecError(f"generator index out of range 1..{self.n}: {idx}")
        two = self.variant in ("L2",) + _PAIRED
        if two and (self.v is None or self.v == self.u):
            raise FamilySpecError(f"{self.variant} needs two distinct generators")
        if not two and self.v is not None:
            raise FamilySpecError(f"{self.variant} takes a single generator")
        if self.variant in ("L", "L2"):
            if self.l != 2:
                raise FamilySpecError("degree-2 families have l == 2")
            if self.k is not None:
                raise FamilySpecError("degree-2 families take no k")
            return
        if self.l < 3 or self.l % 2 == 0:
            raise FamilySpecError(f"odd families need odd l >= 3, got {self.l}")
        if self.variant == "M":
            if self.k is not None:
                raise FamilySpecError("M(u) takes no k")
        elif self.k is None or not 1 <= self.k <= self.m - 1:
            raise FamilySpecError(f"k must lie in 1..{self.m - 1} for l = {self.l}, got {self.k}")

    @property
    def m(self) -> int:
        return (self.l + 1) // 2

    # one constructor per variant
    @classmethod
    def L(cls, n, i):
        return cls("L", n, 2, i)

    @classmethod
    def L2(cls, n, i, j):
        return cls("L2", n, 2, i, j)

    @classmethod
    def M(cls, n, l, u):
        return cls("M", n, l, u)

    @classmethod
    def Muv(cls, n, l, u, v, k):
        return cls("Muv", n, l, u, v, k)

    @classmethod
    def Nuv(cls, n, l, u, v, k):
        return cls("Nuv", n, l, u, v, k)

    @classmethod
    def Mvu(cls, n, l, u, v, k):
        return cls("Mvu", n, l, u, v, k)

    @classmethod
    def Nvu(cls, n, l, u, v, k):
        return cls("Nvu", n, l, u, v, k)

    def sort_key(self):
        return (VARIANTS.index(self.variant), self.k or 0, self.u, self.v or 0)

    def canonical(self) -> "FamilySpec":
        """Mvu/Nvu rewritten as the identical Muv/Nuv with roles swapped."""
        if self.variant in ("Mvu", "Nvu"):
            return FamilySpec(self.variant[0] + "uv", self.n, self.l, self.v, self.u, self.k)
        return self

    @property
    def text(self) -> str:
        return format_family(self)

    def __str__(self):
        return self.text


def build_cover(spec: FamilySpec) -> CoverGraph:
    l = spec.l
    perms = [identity_perm(l)] * spec.n
    var = spec.variant
    if var == "L":
        perms[spec.u - 1] = (1, 0)
    elif var == "L2":
        perms[spec.u - 1] = perms[spec.v - 1] = (1, 0)
    elif var == "M":
        perms[spec.u - 1] = shift_perm(l, 1)
    else:
        first, second = (spec.u, spec.v) if var in ("Muv", "Nuv") else (spec.v, spec.u)
        sign = -1 if var[0] == "M" else 1
        perms[first - 1] = shift_perm(l, 1)
        perms[second - 1] = shift_perm(l, sign * spec.k)
    return CoverGraph(spec.n, l, tuple(perms))


def criterion_from_sums(sums, spec: FamilySpec):
    """Closed-form verdict from exponent sums.

    ``sums`` is indexed 0-based by generator; numpy arrays of shape (..., n)
    are accepted and give an elementwise verdict.
    """
    l, var = spec.l, spec.variant
    ou = sums[..., spec.u - 1] if hasattr(sums, "ndim") else sums[spec.u - 1]
    if var == "L":
        return ou % 2 == 0
    if var == "M":
        return ou % l == 0
    ov = sums[..., spec.v - 1] if hasattr(sums, "ndim") else sums[spec.v - 1]
    if var == "L2":
        return (ou + ov) % 2 == 0
    k = spec.k
    if var == "Muv":
        return (ou - k * ov) % l == 0
    if var == "Mvu":
        return (k * ou - ov) % l == 0
    if var == "Nuv":
        return (ou + k * ov) % l == 0
    return (ov + k * ou) % l == 0


def criterion(w: FreeWord, spec: FamilySpec) -> bool:
    check_rank(w, spec.n)
    return bool(criterion_from_sums(exponent_sums(w).sums, spec))


def classify_mod3(w: FreeWord, u: int, v: int) -> FamilySpec:
    """Family named by the mod-3 table of exponent-sum residues.

    Row ``o(a_u) = 0`` offers M(u) (and M(v) when both vanish); M(u) is chosen.
    """
    if u == v:
        raise FamilySpecError("classify_mod3 needs u != v")
    if w.n < 2:
        raise FamilySpecError("classify_mod3 needs rank >= 2")
    o = exponent_sums(w)
    a, b = o.of(u) % 3, o.of(v) % 3
    if a == 0:
        return FamilySpec.M(w.n, 3, u)
    if b == 0:
        return FamilySpec.M(w.n, 3, v)
    if a == b:
        return FamilySpec.Muv(w.n, 3, u, v, 1)
    return FamilySpec.Nuv(w.n, 3, u, v, 1)


def all_specs(n: int, l: int, pairs=None) -> list[FamilySpec]:
    """Every family member of degree ``l`` (2 or odd >= 3) over rank ``n``.

    ``pairs`` restricts two-generator families to the given ordered pairs;
    by default all ordered pairs u != v are used, so e.g. Muv(1,2,k) and
    Mvu(2,1,k) both appear even though they build the same cover.
    """
    if pairs is None:
        pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    singles = sorted({x for pair in pairs for x in pair}) if pairs else list(range(1, n + 1))
    specs = []
    if l == 2:
        specs += [FamilySpec.L(n, i) for i in singles]
        specs += [FamilySpec.L2(n, u, v) for u, v in pairs]
    else:
        specs += [FamilySpec.M(n, l, u) for u in singles]
        for var in _PAIRED:
            specs += [FamilySpec(var, n, l, u, v, k) for u, v in pairs for k in range(1, (l + 1) // 2)]
    return sorted(specs, key=FamilySpec.sort_key)


def identify_family(c: CoverGraph) -> Optional[FamilySpec]:
    """First family member (in sort order) whose cover equals ``c``, if any."""
    l = c.degree
    if c.base != 0 or not (l == 2 or (l >= 3 and l % 2 == 1)):
        return None
    for spec in all_specs(c.n, l) if c.n > 1 else all_specs(c.n, l, pairs=[]):
        if build_cover(spec) == c:
            return spec
    return None


# -- text form: "M:u", "M:u,v^k", "N:u,v^k", "L:i", "L:i,j", optional "@l" ---

_FAMILY_RE = re.compile(r"^\s*([LMN]):\s*([1-9][0-9]*)(?:\s*,\s*([1-9][0-9]*))?(?:\^([1-9][0-9]*))?(?:@([1-9][0-9]*))?\s*$")


def parse_family(text: str, n: int) -> FamilySpec:
    """Parse the CLI text form, e.g. ``"M:1,2^3@7"`` or ``"L:1,2"``.

    The first listed generator is the one rotated by +1, so ``"M:2,1^3@7"``
    denotes Mvu(1, 2, 3).  Omitted ``^k`` means k = 1; degree-2 families
    default to ``@2``.
    """
    match = _FAMILY_RE.match(text)
    if match is None:
        raise FamilySpecError(f"cannot parse family {text!r}")
    letter, a, b, k, l = match.groups()
    a = int(a)
    b = int(b) if b else None
    if letter == "L":
        if k is not None:
            raise FamilySpecError("L families take no ^k")
        if l is not None and int(l) != 2:
            raise FamilySpecError("L families have degree 2")
        return FamilySpec.L(n, a) if b is None else FamilySpec.L2(n, a, b)
    if l is None:
        raise FamilySpecError(f"odd families need a degree suffix like @3: {text!r}")
    if b is None:
        if letter == "N" or k is not None:
            raise FamilySpecError(f"single-generator odd family must be written M:u@l, got {text!r}")
        return FamilySpec.M(n, int(l), a)
    return FamilySpec(letter + "uv", n, int(l), a, b, int(k) if k else 1)


def format_family(spec: FamilySpec) -> str:
    var = spec.variant
    if var == "L":
        return f"L:{spec.u}"
    if var == "L2":
        return f"L:{spec.u},{spec.v}"
    if var == "M":
        return f"M:{spec.u}@{spec.l}"
    c = spec.canonical()
    return f"{var[0]}:{c.u},{c.v}^{c.k}@{c.l}"
