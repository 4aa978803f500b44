"""dworklab: exact eigenspace combinatorics and point counts for Dwork-family
hypersurfaces.

The family x_1^N + ... + x_N^N = N t x_1^{w_1} ... x_N^{w_N} carries a finite
group action whose characters are cosets of zero-sum residue vectors; the
library computes the eigenspace tables (dimensions, Hodge-Tate weight
multisets, duality, orbit structure), finds and certifies repeated-weight
witnesses, and independently counts points of smooth fibers over finite
fields, extracting the middle trace and checking the standard identities.
"""

__version__ = "0.1.0"

from .characters import (
    CharClass,
    ResidueVector,
    WeightVector,
    apply_permutation,
    apply_unit_scaling,
    canonical_representative,
    class_of,
    classical_weight,
    coset_elements,
    coset_elements_indexed,
    enumerate_classes,
    is_totally_nonzero,
    negate,
    orbit_normal_form,
    permute_class,
    scale_class,
    symmetric_orbits,
    zero_dominant_form,
)
from .hodge import (
    HodgeData,
    WitnessConstructionError,
    WitnessReport,
    classical_repeat_class,
    construct_repeat_witness,
    dual_class,
    hodge_data,
    ht_of_vector,
    relabel_invariance_report,
    repeated_class_representatives,
    repeated_ht_scan,
    scan_contains,
    semantics_divergent,
    total_dimension,
    totally_nonzero_representatives,
)
from .counting import (
    BudgetError,
    CapabilityError,
    CharacteristicError,
    DEFAULT_BUDGET,
    FiberCount,
    FiberSpec,
    FiniteField,
    SmoothnessError,
    candidate_count,
    count_projective_fast,
    count_projective_naive,
    enumerate_points,
    field_make,
    group_action_check,
    group_elements,
    is_prime,
    middle_trace,
    tower_counts,
    weil_bound_ok,
)

__all__ = [name for name in dir() if not name.startswith("_")]
