"""The skew group algebra as a McKay quiver with relations, basis-level
multiplication, the trivial-idempotent ideal and its radical columnwise,
and the quotient quivers."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GroupMismatch, NotFullQuiver
from .groups import Character, DiagonalGroup, coordinate_character, dual_characters
from .monomials import Monomial, SupportFamily, member, monomial_character

Arrow = tuple[int, int, int]  # (source vertex index, target vertex index, variable 1-based)


@dataclass(frozen=True)
class Quiver:
    group: DiagonalGroup
    vertices: tuple[Character, ...]
    arrows: tuple[Arrow, ...]
    kind: str  # "full" | "bar" | "tilde"

    def out_degree(self, v: int) -> int:
        return sum(1 for a in self.arrows if a[0] == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for a in self.arrows if a[1] == v)


@dataclass(frozen=True)
class RelationSet:
    """Commutativity squares (vertex, i, j): x_j x_i = x_i x_j from there."""

    quiver: Quiver
    squares: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class LambdaBasisElement:
    """The basis element f * e_u of the column over the vertex u."""

    source: Character
    monomial: Monomial

    @property
    def target(self) -> Character:
        return self.source + monomial_character(self.source.group, self.monomial)

    @property
    def degree(self) -> int:
        return self.monomial.degree


@dataclass(frozen=True)
class RadicalColumns:
    group: DiagonalGroup
    columns: dict[tuple[int, ...], SupportFamily]  # keyed by character coords

    def column(self, u: Character) -> SupportFamily:
        return self.columns[u.coords]


def mckay_quiver(group: DiagonalGroup) -> Quiver:
    """Vertices are the characters; each variable adds its character."""
    verts = dual_characters(group)
    index = {c.coords: i for i, c in enumerate(verts)}
    var_chars = [coordinate_character(group, i) for i in range(1, group.dim + 1)]
    arrows = []
    for src, u in enumerate(verts):
        for i, vc in enumerate(var_chars, start=1):
            arrows.append((src, index[(u + vc).coords], i))
    return Quiver(group, tuple(verts), tuple(sorted(arrows)), "full")


def commutation_relations(quiver: Quiver) -> RelationSet:
    """One square per (vertex, unordered variable pair)."""
    if quiver.kind != "full":
        raise NotFullQuiver("relations are read off the full McKay quiver")
    n = quiver.group.dim
    squares = [
        (v, i, j)
        for v in range(len(quiver.vertices))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    return RelationSet(quiver, tuple(squares))


def lambda_product(
    a: LambdaBasisElement, b: LambdaBasisElement
) -> LambdaBasisElement | None:
    """Compose b then a; None when the endpoints do not match."""
    if a.source.group != b.source.group:
        raise GroupMismatch("basis elements live over different groups")
    if a.source != b.target:
        return None
    return LambdaBasisElement(b.source, a.monomial * b.monomial)


def divisor_character_set(group: DiagonalGroup, f: Monomial) -> frozenset[tuple[int, ...]]:
    """Character coordinates realized by the divisors of f."""
    snf = group.snf
    reach = {(0,) * len(snf)}
    for i, e in enumerate(f.exponents):
        if not e:
            continue
        vc = coordinate_character(group, i + 1).coords
        cur = set(reach)
        step = reach
        for _ in range(e):
            step = {
                tuple((a + b) % q for a, b, q in zip(s, vc, snf)) for s in step
            }
            cur |= step
        reach = cur
    return frozenset(reach)


def lambda_e_lambda_member(group: DiagonalGroup, u: Character, f: Monomial) -> bool:
    """True iff some divisor of f carries the character -u.

    Exactly the basis elements of the column of the two-sided ideal
    generated by the trivial idempotent.
    """
    return (-u).coords in divisor_character_set(group, f)


def dual_span(group: DiagonalGroup, coords_list) -> frozenset[tuple[int, ...]]:
    """Subgroup of the dual generated by the given coordinate tuples."""
    snf = group.snf
    zero = (0,) * len(snf)
    span = {zero}
    frontier = [zero]
    gens = list(coords_list)
    while frontier:
        s = frontier.pop()
        for g in gens:
            t = tuple((a + b) % q for a, b, q in zip(s, g, snf))
            if t not in span:
                span.add(t)
                frontier.append(t)
    return frozenset(span)


def support_spans(group: DiagonalGroup) -> dict[tuple[int, ...], frozenset]:
    """For every support S, the dual subgroup its variable characters generate."""
    import itertools

    var_coords = [
        coordinate_character(group, i).coords for i in range(1, group.dim + 1)
    ]
    spans = {}
    for size in range(group.dim + 1):
        for s in itertools.combinations(range(1, group.dim + 1), size):
            spans[s] = dual_span(group, [var_coords[i - 1] for i in s])
    return spans


def radical_columns(group: DiagonalGroup) -> RadicalColumns:
    """Column u holds the supports whose variable characters reach -u."""
    spans = support_spans(group)
    columns = {}
    for u in dual_characters(group):
        target = (-u).coords
        good = [s for s, span in spans.items() if target in span]
        columns[u.coords] = SupportFamily.from_supports(good)
    return RadicalColumns(group, columns)


def quiver_bar(quiver: Quiver) -> Quiver:
    """Delete the trivial-character vertex and all incident arrows."""
    if quiver.kind != "full":
        raise NotFullQuiver("the quotient quiver is cut from the full one")
    keep = [i for i, c in enumerate(quiver.vertices) if not c.is_trivial]
    remap = {old: new for new, old in enumerate(keep)}
    verts = tuple(quiver.vertices[i] for i in keep)
    arrows = tuple(
        sorted(
            (remap[s], remap[t], i)
            for (s, t, i) in quiver.arrows
            if s in remap and t in remap
        )
    )
    return Quiver(quiver.group, verts, arrows, "bar")


def quiver_tilde(quiver: Quiver, cols: RadicalColumns) -> Quiver:
    """Cut of the radical quotient: additionally drop every arrow whose
    variable already lies in the source vertex's radical column."""
    if quiver.kind != "full":
        raise NotFullQuiver("the quotient quiver is cut from the full one")
    bar = quiver_bar(quiver)
    n = quiver.group.dim
    arrows = tuple(
        sorted(
            (s, t, i)
            for (s, t, i) in bar.arrows
            if not member(cols.column(bar.vertices[s]), Monomial.variable(n, i))
        )
    )
    return Quiver(quiver.group, bar.vertices, arrows, "tilde")


def beilinson_dims(group: DiagonalGroup) -> tuple[tuple[int, ...], int]:
    """Graded piece dimensions of the first n degrees and the total
    dimension of the upper-triangular algebra built from them."""
    n = group.dim
    dims = tuple(group.order * math.comb(d + n - 1, n - 1) for d in range(n))
    total = sum((n - d) * dims[d] for d in range(n))
    return dims, total
