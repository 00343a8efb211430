"""Weighted multiplier ideals of reduced divisors and related singularity invariants.

Everything is exact: monomial ideals are antichains of integer vectors,
weights are Fractions, and ranks come from exact elimination.
"""
from .bounds import (
    budget_check,
    low_degree_deductions,
    lc_special_point_bound,
    nonrational_point_bound,
    surjectivity_threshold,
)
from .dual_complex import DualComplex, betti_numbers, build_dual_complex, euler_characteristic
from .errors import (
    DimensionMismatch,
    InsufficientHodgeData,
    InvalidConfiguration,
    InvalidInput,
    LcInconsistent,
    NotApplicable,
    WmiError,
)
from .invariants import (
    CDimensionReport,
    c_dimensions,
    classify_lc_type,
    curve_branch_c2,
    surface_c_dims,
    transversal_rank,
)
from .mhs import (
    GradedPieceQuery,
    SncConfiguration,
    StratumComponent,
    delta_complex_q,
    graded_piece_dim,
    hodge_0q_profile,
)
from .monomial import INFINITE, MonomialIdeal, colength, contains, intersect, membership, minimalize
from .saito import adjoint_colength, is_log_canonical, weighted_ideal, wh_chain
from .snc_ideals import local_wmi_generators, strata_union_ideal

__version__ = "0.1.0"
