"""Monomial-level invariant theory: characters of monomials, isotypic
counts, the Hilbert basis of the invariant monoid, and radical monomial
ideals stored as upward-closed support families."""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass

from .errors import DimensionMismatch
from .groups import Character, DiagonalGroup, SubgroupK

Support = tuple[int, ...]  # sorted 1-based coordinate indices


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> Support:
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise DimensionMismatch("monomials have different variable counts")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def quotient_by(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def power(self, k: int) -> "Monomial":
        return Monomial(tuple(k * e for e in self.exponents))

    @staticmethod
    def one(n: int) -> "Monomial":
        return Monomial((0,) * n)

    @staticmethod
    def variable(n: int, i: int) -> "Monomial":
        return Monomial(tuple(1 if j == i - 1 else 0 for j in range(n)))


def monomials_of_degree(n: int, d: int):
    """All exponent vectors of total degree d in n variables, lex order."""
    if n == 0:
        if d == 0:
            yield Monomial(())
        return
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 2 - prev)
        yield Monomial(tuple(exps))


def monomials_up_to_degree(n: int, d: int):
    for deg in range(d + 1):
        yield from monomials_of_degree(n, deg)


@dataclass(frozen=True)
class SupportFamily:
    """An upward-closed family of variable supports (a radical monomial ideal).

    Only the antichain of minimal supports is stored; a support belongs to
    the family iff it contains one of them.  The unit family has the empty
    support as its single minimal member; the empty family has none.
    """

    minimal_supports: tuple[Support, ...]

    @staticmethod
    def from_supports(supports) -> "SupportFamily":
        canon = sorted({tuple(sorted(set(s))) for s in supports}, key=lambda s: (len(s), s))
        kept: list[Support] = []
        for s in canon:
            if not any(set(t) <= set(s) for t in kept):
                kept.append(s)
        return SupportFamily(tuple(sorted(kept)))

    @staticmethod
    def unit() -> "SupportFamily":
        return SupportFamily(((),))

    @staticmethod
    def empty() -> "SupportFamily":
        return SupportFamily(())

    @property
    def is_unit(self) -> bool:
        return self.minimal_supports == ((),)

    @property
    def is_empty(self) -> bool:
        return not self.minimal_supports

    def contains_support(self, support) -> bool:
        s = set(support)
        return any(set(t) <= s for t in self.minimal_supports)


def member(family: SupportFamily, m: Monomial) -> bool:
    """True iff the monomial's support contains a minimal support."""
    return family.contains_support(m.support())


def intersect(families: list[SupportFamily]) -> SupportFamily:
    """Meet of support families; the empty list yields the unit family."""
    acc = SupportFamily.unit()
    for fam in families:
        unions = [
            tuple(sorted(set(a) | set(b)))
            for a in acc.minimal_supports
            for b in fam.minimal_supports
        ]
        acc = SupportFamily.from_supports(unions)
    return acc


def coordinate_ideal(sub: SubgroupK) -> SupportFamily:
    """Prime ideal of the subspace the subgroup fixes: (x_i : i not fixed)."""
    return SupportFamily.from_supports(
        (i,) for i in range(1, sub.group.dim + 1) if i not in sub.fixed_coords
    )


def monomial_character(group: DiagonalGroup, m: Monomial) -> Character:
    """The dual-group element sending g to sum_i m_i * g_i mod M."""
    if len(m.exponents) != group.dim:
        raise DimensionMismatch(
            f"monomial has {len(m.exponents)} exponents, group dim is {group.dim}"
        )
    values = [
        sum(e * b[i] for i, e in enumerate(m.exponents)) % group.modulus
        for b in group.snf_basis
    ]
    return group.character_from_values(values)


def _coordinate_char_coords(group: DiagonalGroup) -> list[tuple[int, ...]]:
    from .groups import coordinate_character

    return [coordinate_character(group, i).coords for i in range(1, group.dim + 1)]


def isotypic_table(group: DiagonalGroup, d: int) -> dict[tuple[int, ...], int]:
    """Count degree-d monomials per character, by a DP over the variables."""
    snf = group.snf
    var_coords = _coordinate_char_coords(group)
    zero = (0,) * len(snf)
    # counts[deg][coords] after processing a prefix of the variables
    counts: list[dict[tuple[int, ...], int]] = [
        {zero: 1} if deg == 0 else {} for deg in range(d + 1)
    ]
    for vc in var_coords:
        nxt: list[dict[tuple[int, ...], int]] = [{} for _ in range(d + 1)]
        for deg in range(d + 1):
            for coords, cnt in counts[deg].items():
                cur = coords
                for e in range(0, d - deg + 1):
                    if e:
                        cur = tuple((a + b) % q for a, b, q in zip(cur, vc, snf))
                    bucket = nxt[deg + e]
                    bucket[cur] = bucket.get(cur, 0) + cnt
        counts = nxt
    return counts[d]


def isotypic_dimension(group: DiagonalGroup, tau: Character, d: int) -> int:
    """Number of degree-d monomials whose character equals tau."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return isotypic_table(group, d).get(tau.coords, 0)


def invariant_hilbert_basis(
    group: DiagonalGroup, bound: int | None = None
) -> list[Monomial]:
    """Product-irreducible invariant monomials of degree <= bound.

    The default bound |G| is the classical degree bound for abelian
    invariants; a generator found at exactly the bound degree is reported
    via a warning since a user-supplied lower bound may then truncate.
    """
    if bound is None:
        bound = group.order
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = group.dim
    snf = group.snf
    var_coords = _coordinate_char_coords(group)
    zero = (0,) * len(snf)

    def char_coords(m: Monomial) -> tuple[int, ...]:
        acc = list(zero)
        for e, vc in zip(m.exponents, var_coords):
            for j, (c, q) in enumerate(zip(vc, snf)):
                acc[j] = (acc[j] + e * c) % q
        return tuple(acc)

    basis: list[Monomial] = []
    for d in range(1, bound + 1):
        for m in monomials_of_degree(n, d):
            if char_coords(m) != zero:
                continue
            if any(b.divides(m) for b in basis):
                continue
            basis.append(m)
            if d == bound:
                warnings.warn(
                    f"invariant generator {m.exponents} found at the degree bound "
                    f"{bound}; a larger bound may reveal more generators",
                    stacklevel=2,
                )
    return basis


def total_monomial_count(n: int, d: int) -> int:
    return math.comb(d + n - 1, n - 1)
