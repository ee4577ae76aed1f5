"""Schur rings over cyclic groups: structure, separability, duality, oracle."""

from .core import (
    SRing,
    a_subgroups,
    closure,
    cyclotomic_sring,
    full_sring,
    generated,
    is_wreath,
    radical,
    rank2_sring,
    refines,
    restriction,
    structure_constant,
    tensor,
    validate,
)
from .duality import CyclotomicInt, character_sum, dual_section, dual_sring
from .errors import (
    CosetClosureNotCoset,
    DualNotAnSRing,
    IntersectionNotAnSRing,
    LimitExceeded,
    MissingIdentityClass,
    NoInducingUnit,
    NotAPartition,
    NotASection,
    NotCoprime,
    NotEquivalent,
    NotInverseClosed,
    NotMultiplicativelyClosed,
    ReconstructionFailed,
    SingularConditionViolated,
    SRingError,
    TheoryViolation,
    ValidationError,
)
from .modarith import (
    CyclicGroup,
    UnitGroup,
    cyclotomic_poly,
    divisors,
    subgroup,
    unit_subgroups,
    units,
)
from .multipliers import (
    AutStabilizer,
    Multiplier,
    OuterMultiplier,
    SeparabilityReport,
    aut_stabilizer,
    fmult_group,
    is_separable,
    is_valid_multiplier,
    is_valid_outer_multiplier,
    mult_group,
    theta,
)
from .oracle import (
    Isomorphism,
    coset_closure,
    enumerate_srings,
    find_isomorphism,
    intersect,
    is_separable_bruteforce,
    phi_infty,
    verify_isomorphism,
)
from .sections import (
    ProjClass,
    Section,
    f_unit,
    frs0,
    is_multiple,
    is_quasidense,
    principal_sections,
    proj_classes,
    reduce_to_quasidense,
    restrict_to,
    ring_sections,
    s_extension,
    singular_witness,
)
from .similarities import (
    Similarity,
    from_unit,
    fs_of,
    identity_similarity,
    inducing_unit,
    is_similarity,
    restrict_similarity,
    similarities,
    similarity_from_outer,
)

__version__ = "0.1.0"
