"""Qualifying pairs (character, stabilizer subgroup), their equivalence
classes, the embedding/projection homomorphisms between the skew algebra
and its subgroup quotients, and the classical generator descriptions."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SupportViolation
from .groups import (
    Character,
    DiagonalGroup,
    QuotientPresentation,
    RestrictionFingerprint,
    SubgroupK,
    dual_characters,
    k_lattice,
    quotient_group,
    restrict_character,
)
from .monomials import Monomial, monomial_character
from .quiver import LambdaBasisElement, lambda_e_lambda_member


@dataclass(frozen=True)
class QualifyingPair:
    """(chi, K): chi nontrivial on K, trivial on every smaller lattice member."""

    chi: Character
    sub: SubgroupK
    witnesses: tuple[SubgroupK, ...]  # the strictly smaller lattice members


@dataclass(frozen=True)
class PairClass:
    """Pairs with a common subgroup and a common restriction to it."""

    sub: SubgroupK
    fingerprint: RestrictionFingerprint
    representative: Character
    members: tuple[Character, ...]
    qualifying: tuple[bool, ...]

    @property
    def mixed(self) -> bool:
        return len(set(self.qualifying)) > 1


def qualifying_pairs(group: DiagonalGroup) -> list[QualifyingPair]:
    lattice = k_lattice(group)
    out: list[QualifyingPair] = []
    for chi in dual_characters(group):
        if chi.is_trivial:
            continue
        for sub in lattice:
            if not restrict_character(chi, sub).nontrivial:
                continue
            smaller = [
                other
                for other in lattice
                if other.members != sub.members and sub.contains(other)
            ]
            if any(restrict_character(chi, other).nontrivial for other in smaller):
                continue
            out.append(QualifyingPair(chi, sub, tuple(smaller)))
    return out


def gtilde0(group: DiagonalGroup) -> list[PairClass]:
    """Classes of qualifying pairs under (same subgroup, same restriction).

    A class is listed once it contains at least one qualifying pair; its
    members are all characters with that restriction, each flagged.
    """
    pairs = qualifying_pairs(group)
    keys = {}
    for p in pairs:
        keys.setdefault((p.sub.members, restrict_character(p.chi, p.sub)), p.sub)
    classes = []
    for (members_key, fp), sub in keys.items():
        members = [
            chi
            for chi in dual_characters(group)
            if restrict_character(chi, sub) == fp
        ]
        qualifying = tuple(
            any(p.chi == chi and p.sub.members == members_key for p in pairs)
            for chi in members
        )
        rep = min(
            (chi for chi, q in zip(members, qualifying) if q),
            key=lambda c: c.coords,
        )
        classes.append(PairClass(sub, fp, rep, tuple(members), qualifying))
    classes.sort(key=lambda c: (c.sub.sort_key(), c.fingerprint.table))
    return classes


def column_pair_set(group: DiagonalGroup, r: Character) -> list[SubgroupK]:
    """Subgroups of the classes compatible with the vertex character r."""
    out = []
    seen = set()
    for cls in gtilde0(group):
        if cls.sub.members in seen:
            continue
        if restrict_character(r, cls.sub) == cls.fingerprint:
            out.append(cls.sub)
            seen.add(cls.sub.members)
    return sorted(out, key=SubgroupK.sort_key)


@dataclass(frozen=True)
class QuotientBasisElement:
    """Basis element of the subgroup-quotient skew algebra: a character of
    G/K together with an ambient monomial supported on the fixed variables."""

    mu: Character
    monomial: Monomial


class PairContext:
    """Everything attached to one pair (chi, K): the matching idempotent
    set, the quotient presentation of G/K, and its fixed coordinates."""

    def __init__(self, group: DiagonalGroup, chi: Character, sub: SubgroupK):
        self.group = group
        self.chi = chi
        self.sub = sub
        fp = restrict_character(chi, sub)
        self.fingerprint = fp
        self.idempotents = tuple(
            c for c in dual_characters(group) if restrict_character(c, sub) == fp
        )
        self.quotient: QuotientPresentation = quotient_group(group, sub)
        self.fixed_coords = sub.fixed_coords

    def quotient_monomial_character(self, f: Monomial) -> Character:
        """Character of G/K attached to a monomial on the fixed variables."""
        return self.quotient.descend(monomial_character(self.group, f))

    def quotient_product(
        self, a: QuotientBasisElement, b: QuotientBasisElement
    ) -> QuotientBasisElement | None:
        target_b = b.mu + self.quotient_monomial_character(b.monomial)
        if a.mu != target_b:
            return None
        return QuotientBasisElement(b.mu, a.monomial * b.monomial)


def pair_context(group: DiagonalGroup, chi: Character, sub: SubgroupK) -> PairContext:
    return PairContext(group, chi, sub)


def kappa_embed(ctx: PairContext, mu: Character) -> Character:
    """Send a character of G/K to its pullback shifted by chi."""
    return ctx.quotient.pullback(mu) + ctx.chi


def sigma_project(ctx: PairContext, chi_prime: Character) -> Character | None:
    """Inverse of kappa on the idempotent set; None (annihilated) outside."""
    if chi_prime not in ctx.idempotents:
        return None
    return ctx.quotient.descend(chi_prime - ctx.chi)


def eta_eval(ctx: PairContext, a: LambdaBasisElement) -> QuotientBasisElement | None:
    """Image of a basis element under the quotient surjection.

    Zero unless the source lies in the idempotent set and the monomial only
    uses the fixed variables; kills every column element of the
    trivial-idempotent ideal.
    """
    mu = sigma_project(ctx, a.source)
    if mu is None:
        return None
    if not set(a.monomial.support()) <= set(ctx.fixed_coords):
        return None
    return QuotientBasisElement(mu, a.monomial)


def lambda_lift(ctx: PairContext, b: QuotientBasisElement) -> LambdaBasisElement:
    """Section of eta: embed a quotient basis element back into the algebra."""
    if not set(b.monomial.support()) <= set(ctx.fixed_coords):
        raise SupportViolation(
            f"monomial {b.monomial.exponents} uses variables outside {ctx.fixed_coords}"
        )
    return LambdaBasisElement(kappa_embed(ctx, b.mu), b.monomial)


def eta_annihilates(ctx: PairContext, a: LambdaBasisElement) -> bool:
    """Check helper: the ideal column membership forces eta to vanish."""
    if not lambda_e_lambda_member(ctx.group, a.source, a.monomial):
        return True
    return eta_eval(ctx, a) is None


@dataclass(frozen=True)
class IdentityReport:
    contexts: int
    checks: int
    failures: tuple[str, ...]
    seconds: float

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_identities(
    group: DiagonalGroup,
    eta_lambda_degree: int = 4,
    mult_degree: int = 3,
    annihilate_degree: int = 4,
) -> IdentityReport:
    """Exhaustive check of the section/retraction identities per context:
    sigma o kappa = Id, eta o lambda = Id, eta multiplicative, and eta
    killing the trivial-idempotent ideal columns."""
    import time

    from .monomials import monomials_up_to_degree
    from .quiver import divisor_character_set, lambda_product

    start = time.perf_counter()
    chars = dual_characters(group)
    top_degree = max(eta_lambda_degree, mult_degree, annihilate_degree)
    monos = list(monomials_up_to_degree(group.dim, top_degree))
    divisor_chars = {
        m.exponents: divisor_character_set(group, m)
        for m in monos
        if m.degree <= max(mult_degree, annihilate_degree)
    }
    checks = 0
    failures: list[str] = []

    def fail(ctx: PairContext, text: str) -> None:
        failures.append(
            f"context (chi={ctx.chi.coords}, K fixing {ctx.fixed_coords}): {text}"
        )

    contexts = [pair_context(group, p.chi, p.sub) for p in qualifying_pairs(group)]
    for ctx in contexts:
        quotient_chars = dual_characters(ctx.quotient.group)
        for mu in quotient_chars:
            checks += 1
            if sigma_project(ctx, kappa_embed(ctx, mu)) != mu:
                fail(ctx, f"sigma(kappa(mu)) != mu for mu={mu.coords}")
        fixed = set(ctx.fixed_coords)
        fixed_monos = [
            m
            for m in monos
            if m.degree <= eta_lambda_degree and set(m.support()) <= fixed
        ]
        for mu in quotient_chars:
            for f in fixed_monos:
                checks += 1
                qb = QuotientBasisElement(mu, f)
                if eta_eval(ctx, lambda_lift(ctx, qb)) != qb:
                    fail(ctx, f"eta(lambda(b)) != b for b=({mu.coords}, {f.exponents})")
        by_source: dict[tuple[int, ...], list[LambdaBasisElement]] = {}
        for u in chars:
            by_source[u.coords] = [
                LambdaBasisElement(u, m) for m in monos if m.degree <= mult_degree
            ]
        for u in chars:
            for b in by_source[u.coords]:
                budget = mult_degree - b.degree
                for a in by_source[b.target.coords]:
                    if a.degree > budget:
                        continue
                    checks += 1
                    ea, eb = eta_eval(ctx, a), eta_eval(ctx, b)
                    left = eta_eval(ctx, lambda_product(a, b))
                    right = (
                        None
                        if ea is None or eb is None
                        else ctx.quotient_product(ea, eb)
                    )
                    if left != right:
                        fail(ctx, f"eta not multiplicative on {a} * {b}")
        for u in chars:
            target = (-u).coords
            for m in monos:
                if m.degree > annihilate_degree:
                    continue
                if target in divisor_chars[m.exponents]:
                    checks += 1
                    if eta_eval(ctx, LambdaBasisElement(u, m)) is not None:
                        fail(ctx, f"eta does not kill ideal element ({u.coords}, {m.exponents})")
    return IdentityReport(
        len(contexts), checks, tuple(failures[:20]), time.perf_counter() - start
    )


@dataclass(frozen=True)
class GeneratorSummand:
    quotient_snf: tuple[int, ...]
    variables: tuple[int, ...]  # 1-based fixed coordinates
    shift: int
    multiplicity: int = 1


@dataclass(frozen=True)
class GeneratorDescription:
    summands: tuple[GeneratorSummand, ...]
    e_lambda_shifts: tuple[int, ...]
    convention: str  # "theorem" | "ambient"


def generator_xf(group: DiagonalGroup, convention: str = "theorem") -> GeneratorDescription:
    """One summand family per pair class: the quotient skew algebra on the
    fixed variables, shifted.

    Under "theorem" the shifts run over the dimension of the fixed subspace;
    under "ambient" they run over the ambient dimension, matching how the
    worked examples list the summands.  Classes whose subgroup fixes nothing
    contribute no summands under either convention.
    """
    if convention not in ("theorem", "ambient"):
        raise ValueError(f"unknown convention {convention!r}")
    summands = []
    for cls in gtilde0(group):
        fixed = cls.sub.fixed_coords
        if not fixed:
            continue
        shifts = range(len(fixed)) if convention == "theorem" else range(group.dim)
        snf = quotient_group(group, cls.sub).snf
        for j in shifts:
            summands.append(GeneratorSummand(snf, fixed, j))
    return GeneratorDescription(tuple(summands), (), convention)


def generator_y(group: DiagonalGroup, convention: str = "theorem") -> GeneratorDescription:
    """The kernel generator for the graded singularity quotient: the
    previous generator plus the ambient-many shifts of the e-column."""
    base = generator_xf(group, convention)
    return GeneratorDescription(base.summands, tuple(range(group.dim)), convention)
