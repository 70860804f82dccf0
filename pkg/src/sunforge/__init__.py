"""sunforge: near-sunflowers and focal families in vector families.

Detection predicates, constructive finders and extractors, evaluation-code
and probabilistic constructions, closed-form bound calculators, and an exact
small-cube search oracle.
"""

from .bitfam import (
    BitVector,
    ColumnProfile,
    Family,
    FamilyParseError,
    Params,
    QFamily,
    QVector,
    column_profile,
    complement_family,
    dump_family,
    load_family,
    symmetric_difference,
)
from .bounds import (
    BoundReport,
    binary_entropy,
    count_bound,
    focal_upper,
    kuniform_rate,
    kuniform_size_bound,
    lower_rate,
    mrrw_rate,
    one_sided_total_upper,
    one_sided_uniform_upper,
    qary_bounds,
    report_grid,
)
from .construct import (
    AlterationTrace,
    count_matrices,
    degree_bound,
    expected_size_lower_bound,
    optimal_p,
    random_condition_family,
    random_with_alterations,
    reed_solomon_family,
)
from .detect import (
    CapExceededError,
    DisjointPairsWitness,
    FocalWitness,
    NearSunflowerWitness,
    UniformSizeReport,
    WitnessNotFoundError,
    check_pairwise_symdiff_condition,
    extract_focal_from_large,
    extraction_threshold,
    find_b_focal,
    find_focal,
    find_near_sunflower,
    find_three_disjoint_symdiffs,
    focal_from_linear,
    is_b_focal,
    is_focal,
    is_near_sunflower,
    is_sunflower,
    kuniform_size_check,
    span_family,
    witness_from_json,
)
from .gf import Field, FieldSpec, field_ops
from .search import (
    SearchResult,
    brute_force_count,
    exact_extremal,
    exact_extremal_cached,
    family_is_free,
    own_subset_fraction,
)

__version__ = "0.1.0"
