"""Finite monoid factorizations, descent cocycles and non-abelian cohomology."""

from .catalog import CATALOG, catalog_monoid, catalog_names
from .core import (
    ElementMap,
    FiniteMonoid,
    IndexOutOfRange,
    MonoidError,
    MonoidIso,
    NoIdentity,
    NotAssociative,
    NotInvertible,
    ParentMismatch,
    SizeBoundExceeded,
    SubMonoid,
    compose,
    direct_product,
    endomorphism_monoid,
    enumerate_homs,
    enumerate_monoids,
    enumerate_submonoids,
    find_isomorphism,
    from_table,
    identity_map,
    inverse_in,
    is_subgroup,
    opposite,
    submonoid_closure,
    units,
    zero_map,
)
from .descent import (
    ActionGroupoid,
    CohomologyClasses,
    DescentCocycle,
    NotACocycle,
    NotAFactorization,
    NotAnAction,
    NotASubgroup,
    cocycle_kernel,
    conjugate_second_factor,
    descent_cohomology,
    enumerate_descent_cocycles,
    fac_from_subgroup_cocycle,
    groupoid_components,
    is_descent_cocycle,
    star_act,
    unit_valued_cocycles,
)
from .factorization import (
    Factorization,
    FactorizationFailure,
    characterize_factorization,
    enumerate_factorizations,
    fac_over,
    factorization_attempt,
    first_factor_filter,
    second_factor_filter,
    try_factorization,
    verify_bicross,
)
from .formats import (
    MonoidDocument,
    ParseError,
    emit_action,
    emit_document,
    emit_monoid,
    parse_action,
    parse_document,
    parse_monoid,
)
from .semidirect import (
    ActionMismatch,
    AxiomViolation,
    Cocycle1,
    ConicalReport,
    ConvolutionReport,
    InternalInconsistency,
    MonoidAction,
    NormalityReport,
    NotASplitPair,
    NotUnitValued,
    NotUnitValuedHom,
    SectionsReport,
    SemidirectProduct,
    SplitEpiReport,
    action_from_hom,
    conical_check,
    factorization_normality_equivalences,
    fac_from_z1,
    h0,
    h1,
    inner_action_and_convolution,
    normality_check,
    opposite_action,
    sections,
    semidirect,
    split_epi_analysis,
    trivial_action,
    validate_action,
    z1,
)
from .verify import CheckResult, VerifyReport, verify_suite
from .witnesses import WitnessReport, integer_witnesses, odd_power_decomposition

__all__ = [name for name in dir() if not name.startswith("_")]
