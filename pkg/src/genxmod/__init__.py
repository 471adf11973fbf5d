"""Finite generalized crossed modules, generalized cat1-groups, coverings and liftings.

Everything is table-based and exhaustively checkable: groups are dense Cayley
tables, actions are dense tables, and every axiom, lemma and the
covering/lifting equivalence can be verified by direct enumeration on small
orders.
"""

from .validation import (
    PreconditionError,
    StructuralError,
    ValidationReport,
    Violation,
)
from .groups import (
    GroupTable,
    Hom,
    Subgroup,
    all_homs,
    automorphism_group,
    automorphisms,
    compose_homs,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_from_op,
    hom,
    identity_hom,
    image,
    inverse_hom,
    is_hom,
    kernel,
    klein_four_group,
    quaternion_group,
    subgroup,
    subgroup_closure,
    symmetric_group,
    trivial_group,
    validate_group,
    validate_hom,
    zero_hom,
)
from .gwa import (
    GwaObject,
    IdealReport,
    SelfAction,
    conjugation_self_action,
    gwa,
    is_gwa_morphism,
    is_ideal,
    is_subobject,
    parity_inversion_action,
    quotient_gwa,
    sub_gwa,
    trivial_self_action,
    validate_gwa,
    validate_gwa_morphism,
)
from .crossed import (
    ExtAction,
    GXMod,
    GXModMorphism,
    check_alpha_gwa_morphism,
    check_kernel_acts_trivially,
    compose_gxmod_morphisms,
    from_invariant_subgroup,
    gxmod,
    identity_gxmod_morphism,
    image_gxmod,
    is_aspherical,
    is_gxmod_isomorphism,
    is_simply_connected,
    kernel_gxmod,
    transport_both,
    transport_codomain,
    transport_domain,
    trivial_ext_action,
    validate_ext_action,
    validate_gxmod,
    validate_gxmod_full,
    validate_gxmod_morphism,
)
from .cat1 import (
    GCat1,
    GCat1Morphism,
    cat1_functor_on_morphism,
    cat1_to_gxmod,
    check_ordinary_cat1,
    identity_gcat1_morphism,
    validate_gcat1,
    validate_gcat1_morphism,
)
from .coverlift import (
    Covering,
    CoveringMorphism,
    Inconclusive,
    Lifting,
    LiftingMorphism,
    WitnessFailure,
    compose_coverings,
    compose_liftings,
    covering_kernel_check,
    covering_to_lifting,
    covering_transport,
    extend_morphism_through_lifting,
    factor_through_covering,
    functor_on_covering_morphism,
    functor_on_lifting_morphism,
    identity_covering,
    image_lifting,
    lifting_as_gxmod,
    lifting_criterion,
    lifting_morphism_as_lifting,
    lifting_to_base_morphism,
    lifting_to_covering,
    lifting_transport,
    morphism_between_coverings,
    natural_lifting,
    quotient_lifting,
    self_lifting,
    validate_covering,
    validate_covering_morphism,
    validate_lifting,
    validate_lifting_morphism,
)
from .search import (
    EquivalenceReport,
    SearchPool,
    covering_morphisms_between,
    enumerate_coverings,
    enumerate_ext_actions,
    enumerate_gcat1s,
    enumerate_gxmods,
    enumerate_liftings,
    enumerate_self_actions,
    gcat1_morphisms_between,
    gwa_objects,
    lifting_morphisms_between,
    standard_pool,
    verify_equivalence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
