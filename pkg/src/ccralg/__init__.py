"""Exact computer algebra for finite twisted group (CCR) algebras.

Finite abelian groups with ordered generators, commutation-phase tables on
generator pairs, the twisted group algebras they define, exact matrix
models, and the structured constructions built from them -- all decided in
exact cyclotomic arithmetic.
"""

from .algebra import (
    AlgebraElement,
    adjoint,
    center_basis,
    commutant_basis,
    conditional_expectation,
    element_from_dict,
    element_to_dict,
    induced_hom,
    is_complemented,
    is_full_matrix,
    l2_inner,
    l2_norm_squared,
    lift_defects,
    multiply,
    normal_order_cocycle,
    reordering_phase,
    tensor_join,
    tensor_split,
    trace,
)
from .constructions import (
    ChainTriple,
    NonUniquenessFragment,
    PairingTriple,
    chain_change_of_generators,
    chain_triple,
    chain_with_core,
    check_f_conditions,
    complementation_contrast,
    nonuniqueness_fragment,
    pairing_block,
    pairing_triple,
    phi,
    phi_matrix,
    recover_order,
    substitute_and_verify,
)
from .cyclotomic import (
    Cyclotomic,
    Phase,
    cyclotomic_polynomial,
    get_conductor_cap,
    set_conductor_cap,
)
from .errors import (
    CapacityError,
    ConductorCapError,
    EnumerationCapError,
    MorphismError,
    MorphismLiftError,
    SpecMismatchError,
    TensorSplitRefusal,
)
from .groups import (
    GroupElement,
    GroupSpec,
    Subgroup,
    element_compose,
    element_inverse,
    subgroup_generated,
    subgroup_member,
)
from .reps import (
    CycMatrix,
    Representation,
    TensorUnitary,
    check_relations,
    clock_shift,
    commutant_dimension,
    compress,
    matrix_commutant_dimension,
    operator_norm,
    regular_rep,
    relative_commutant_dimension,
    rep_gram_is_orthonormal,
    rep_monomial,
    rep_of_element,
    right_regular_monomial,
    weyl_pair,
    witness_rep,
)
from .triples import (
    CCRMorphism,
    CCRTriple,
    ValidationReport,
    bicharacter,
    centralizer,
    check_morphism,
    make_triple,
    triple_from_dict,
    triple_to_dict,
    validate_triple,
)

__version__ = "0.1.0"
