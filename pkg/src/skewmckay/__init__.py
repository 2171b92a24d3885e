"""McKay quivers, skew group algebra combinatorics and exact resolution
checks for finite abelian diagonal subgroups of SL(n)."""

from .groups import (
    Character,
    DiagonalGroup,
    GroupSpec,
    QuotientPresentation,
    RestrictionFingerprint,
    SubgroupK,
    build_group,
    coordinate_character,
    dual_characters,
    k_lattice,
    quotient_group,
    restrict_character,
    stabilizer,
)
from .monomials import (
    Monomial,
    SupportFamily,
    coordinate_ideal,
    intersect,
    invariant_hilbert_basis,
    isotypic_dimension,
    member,
    monomial_character,
)
from .quiver import (
    LambdaBasisElement,
    Quiver,
    RadicalColumns,
    RelationSet,
    beilinson_dims,
    commutation_relations,
    lambda_e_lambda_member,
    lambda_product,
    mckay_quiver,
    quiver_bar,
    quiver_tilde,
    radical_columns,
)
from .resolution import (
    ColumnComplex,
    ExactnessReport,
    GradedMatrix,
    build_column_complex,
    graded_matrices,
    verify_exactness,
    verify_nilpotency,
    verify_radical_oracle,
)
from .strata import (
    GeneratorDescription,
    PairClass,
    PairContext,
    QualifyingPair,
    QuotientBasisElement,
    column_pair_set,
    eta_eval,
    generator_xf,
    generator_y,
    gtilde0,
    kappa_embed,
    lambda_lift,
    pair_context,
    qualifying_pairs,
    sigma_project,
    verify_identities,
)

__version__ = "0.1.0"
