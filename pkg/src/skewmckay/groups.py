"""Finite abelian subgroups of SL(n) acting diagonally, with exact arithmetic.

A group element is the exponent vector of a diagonal matrix: entry ``g[i]``
means the i-th eigenvalue is the fixed primitive M-th root of unity raised
to ``g[i]``.  All identities are congruences mod M; no cyclotomic numbers
appear anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BadVectorLength,
    GroupTooLarge,
    IndexOutOfRange,
    NotASubgroup,
    NotSpecialLinear,
    ZeroModulus,
)
from .snf import smith_normal_form

Element = tuple[int, ...]

DEFAULT_ORDER_CAP = 4096


@dataclass(frozen=True)
class GroupSpec:
    """Ambient dimension, root-of-unity modulus and generator vectors."""

    dim: int
    modulus: int
    generators: tuple[Element, ...]

    def validate(self) -> None:
        if self.modulus <= 0:
            raise ZeroModulus(f"modulus must be positive, got {self.modulus}")
        if self.dim <= 0:
            raise BadVectorLength(f"dim must be positive, got {self.dim}")
        for vec in self.generators:
            if len(vec) != self.dim:
                raise BadVectorLength(
                    f"generator {vec} has length {len(vec)}, expected {self.dim}"
                )
            if any(not (0 <= x < self.modulus) for x in vec):
                raise BadVectorLength(
                    f"generator {vec} has entries outside [0, {self.modulus})"
                )
            if sum(vec) % self.modulus:
                raise NotSpecialLinear(
                    f"generator {vec} has exponent sum {sum(vec)} != 0 mod {self.modulus}"
                )


class DiagonalGroup:
    """A materialized finite abelian group of diagonal exponent vectors.

    Carries a Smith-normal-form presentation: invariant factors
    ``d_1 | d_2 | ... | d_k``, one basis element of exact order ``d_j`` per
    factor, and the full element -> coordinates table.
    """

    def __init__(
        self,
        dim: int,
        modulus: int,
        elements: frozenset[Element],
        generators: tuple[Element, ...] | None = None,
    ):
        self.dim = dim
        self.modulus = modulus
        self.elements: tuple[Element, ...] = tuple(sorted(elements))
        self.order = len(self.elements)
        self.snf, self.snf_basis = self._presentation(generators)
        self.elem_coords = self._coordinate_table()
        self._hash = hash((dim, modulus, self.elements))

    # -- construction --------------------------------------------------

    def _presentation(
        self, generators: tuple[Element, ...] | None
    ) -> tuple[tuple[int, ...], tuple[Element, ...]]:
        n, big_m = self.dim, self.modulus
        vecs = generators if generators is not None else self.elements
        rows = [list(g) for g in vecs if any(g)]
        rows += [[big_m if j == i else 0 for j in range(n)] for i in range(n)]
        if not rows:
            return (), ()
        diag, _, _, v_inv = smith_normal_form(rows, with_u=False)
        factors: list[int] = []
        basis: list[Element] = []
        # row i of V^-1 scaled by the i-th elementary divisor spans the
        # lattice of exponent vectors; its image mod M has order M/d_i
        for i in reversed(range(n)):
            d = diag[i][i]
            if big_m % d:
                raise AssertionError("elementary divisor does not divide modulus")
            if big_m // d == 1:
                continue
            factors.append(big_m // d)
            basis.append(tuple((d * x) % big_m for x in v_inv[i]))
        return tuple(factors), tuple(basis)

    def _coordinate_table(self) -> dict[Element, tuple[int, ...]]:
        multiples: list[list[Element]] = []
        for d, b in zip(self.snf, self.snf_basis):
            chain = [self.zero]
            for _ in range(d - 1):
                chain.append(self.add(chain[-1], b))
            multiples.append(chain)
        table: dict[Element, tuple[int, ...]] = {}
        indexed = [list(enumerate(chain)) for chain in multiples]
        for picks in itertools.product(*indexed):
            vec = self.zero
            for _, p in picks:
                vec = self.add(vec, p)
            table[vec] = tuple(i for i, _ in picks)
        if len(table) != self.order or set(table) != set(self.elements):
            raise AssertionError("SNF basis does not enumerate the group")
        return table

    # -- identity and arithmetic ---------------------------------------

    @property
    def zero(self) -> Element:
        return (0,) * self.dim

    def add(self, g: Element, h: Element) -> Element:
        m = self.modulus
        return tuple((a + b) % m for a, b in zip(g, h))

    def neg(self, g: Element) -> Element:
        m = self.modulus
        return tuple((-a) % m for a in g)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DiagonalGroup)
            and self.dim == other.dim
            and self.modulus == other.modulus
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"DiagonalGroup(dim={self.dim}, modulus={self.modulus}, order={self.order})"

    # -- characters -----------------------------------------------------

    def character(self, coords: tuple[int, ...]) -> "Character":
        if len(coords) != len(self.snf):
            raise ValueError(f"expected {len(self.snf)} coordinates, got {coords}")
        return Character(self, tuple(c % d for c, d in zip(coords, self.snf)))

    @property
    def trivial_character(self) -> "Character":
        return Character(self, (0,) * len(self.snf))

    def character_from_values(self, values: list[int]) -> "Character":
        """Character with the given exponent values on the SNF basis."""
        coords = []
        for val, d in zip(values, self.snf):
            step = self.modulus // d
            val %= self.modulus
            if val % step:
                raise ValueError(f"value {val} is not a multiple of {step}")
            coords.append((val // step) % d)
        return Character(self, tuple(coords))


@dataclass(frozen=True)
class Character:
    """An element of the dual group, evaluated as exponents of the root."""

    group: DiagonalGroup
    coords: tuple[int, ...]

    def value(self, g: Element) -> int:
        m = self.group.modulus
        total = 0
        for c, d, a in zip(self.coords, self.group.snf, self.group.elem_coords[g]):
            total += c * (m // d) * a
        return total % m

    @property
    def is_trivial(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "Character") -> "Character":
        if self.group != other.group:
            raise NotASubgroup("characters live over different groups")
        return Character(
            self.group,
            tuple((a + b) % d for a, b, d in zip(self.coords, other.coords, self.group.snf)),
        )

    def __neg__(self) -> "Character":
        return Character(
            self.group, tuple((-a) % d for a, d in zip(self.coords, self.group.snf))
        )

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)


@dataclass(frozen=True)
class RestrictionFingerprint:
    """Canonical value table of a character on a subgroup."""

    table: tuple[tuple[Element, int], ...]
    nontrivial: bool


@dataclass(frozen=True)
class SubgroupK:
    """A Galois-closed stabilizer subgroup with its fixed coordinate set."""

    group: DiagonalGroup
    members: tuple[Element, ...]
    fixed_coords: tuple[int, ...]  # 1-based, sorted
    closed: bool

    @property
    def order(self) -> int:
        return len(self.members)

    def sort_key(self):
        return (len(self.members), self.members)

    def contains(self, other: "SubgroupK") -> bool:
        return set(other.members) <= set(self.members)


def build_group(spec: GroupSpec, max_order: int = DEFAULT_ORDER_CAP) -> DiagonalGroup:
    """Materialize the additive closure of the generators mod M."""
    spec.validate()
    zero = (0,) * spec.dim
    elements = {zero}
    frontier = [zero]
    while frontier:
        g = frontier.pop()
        for gen in spec.generators:
            h = tuple((a + b) % spec.modulus for a, b in zip(g, gen))
            if h not in elements:
                if len(elements) >= max_order:
                    raise GroupTooLarge(
                        f"group exceeds the order cap {max_order}; raise max_order to proceed"
                    )
                elements.add(h)
                frontier.append(h)
    return DiagonalGroup(spec.dim, spec.modulus, frozenset(elements), spec.generators)


def dual_characters(group: DiagonalGroup) -> list[Character]:
    """All |G| characters, ordered by SNF coordinates; trivial first."""
    return [
        Character(group, coords)
        for coords in itertools.product(*[range(d) for d in group.snf])
    ]


def coordinate_character(group: DiagonalGroup, i: int) -> Character:
    """The character g -> g_i attached to the i-th variable (1-based)."""
    if not 1 <= i <= group.dim:
        raise IndexOutOfRange(f"coordinate {i} outside 1..{group.dim}")
    return group.character_from_values([b[i - 1] for b in group.snf_basis])


def stabilizer(group: DiagonalGroup, coords: set[int] | frozenset[int]) -> SubgroupK:
    """Largest subgroup acting trivially on the given 1-based coordinates."""
    for i in coords:
        if not 1 <= i <= group.dim:
            raise IndexOutOfRange(f"coordinate {i} outside 1..{group.dim}")
    members = tuple(
        g for g in group.elements if all(g[i - 1] == 0 for i in coords)
    )
    fixed = tuple(
        i for i in range(1, group.dim + 1) if all(g[i - 1] == 0 for g in members)
    )
    return SubgroupK(group, members, fixed, True)


def k_lattice(group: DiagonalGroup) -> list[SubgroupK]:
    """All distinct stabilizer subgroups, ordered by (order, members)."""
    seen: dict[tuple[Element, ...], SubgroupK] = {}
    for size in range(group.dim + 1):
        for coords in itertools.combinations(range(1, group.dim + 1), size):
            sub = stabilizer(group, set(coords))
            seen.setdefault(sub.members, sub)
    return sorted(seen.values(), key=SubgroupK.sort_key)


def restrict_character(chi: Character, sub: SubgroupK) -> RestrictionFingerprint:
    """Value table of chi on the subgroup; equal tables = equal restrictions."""
    if sub.group != chi.group:
        raise NotASubgroup("subgroup belongs to a different group")
    table = tuple((g, chi.value(g)) for g in sub.members)
    return RestrictionFingerprint(table, any(v for _, v in table))


class QuotientPresentation:
    """G/K realized as a diagonal group on the fixed coordinates of K.

    Restricting an exponent vector to the coordinates K fixes is a surjective
    homomorphism whose kernel is exactly K (K being a closed stabilizer), so
    the quotient is again a concrete diagonal group and characters of G/K
    pull back to characters of G trivial on K.
    """

    def __init__(self, group: DiagonalGroup, sub: SubgroupK):
        if sub.group != group:
            raise NotASubgroup("subgroup belongs to a different group")
        members = set(sub.members)
        if not members <= set(group.elements):
            raise NotASubgroup("members are not all elements of the group")
        self.parent = group
        self.sub = sub
        self.coord_map = sub.fixed_coords
        cols = [i - 1 for i in sub.fixed_coords]
        self.projection: dict[Element, Element] = {
            g: tuple(g[c] for c in cols) for g in group.elements
        }
        kernel = {g for g, image in self.projection.items() if not any(image)}
        if kernel != members:
            raise NotASubgroup(
                "projection kernel differs from the subgroup; only closed "
                "stabilizer subgroups admit this presentation"
            )
        self.group = DiagonalGroup(
            len(cols),
            group.modulus,
            frozenset(self.projection.values()),
            tuple(self.projection[b] for b in group.snf_basis),
        )
        self.section: dict[Element, Element] = {}
        for g in group.elements:
            self.section.setdefault(self.projection[g], g)

    @property
    def snf(self) -> tuple[int, ...]:
        return self.group.snf

    def pullback(self, mu: Character) -> Character:
        """View a character of G/K as a character of G (trivial on K)."""
        if mu.group != self.group:
            raise NotASubgroup("character does not live on the quotient group")
        values = [mu.value(self.projection[b]) for b in self.parent.snf_basis]
        return self.parent.character_from_values(values)

    def descend(self, chi: Character) -> Character:
        """Inverse of pullback; chi must be trivial on the subgroup."""
        if chi.group != self.parent:
            raise NotASubgroup("character does not live on the parent group")
        if any(chi.value(g) for g in self.sub.members):
            raise ValueError("character is nontrivial on the subgroup")
        values = [chi.value(self.section[b]) for b in self.group.snf_basis]
        return self.group.character_from_values(values)


def quotient_group(group: DiagonalGroup, sub: SubgroupK) -> QuotientPresentation:
    """SNF presentation of G/K with projection and character-pullback maps."""
    return QuotientPresentation(group, sub)
