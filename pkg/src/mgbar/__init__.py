"""Divisor-class and dual-graph calculus for the log minimal model program on M_g-bar."""

from .curve_graphs import (
    CurveGraph,
    GraphError,
    Vertex,
    arithmetic_genus,
    enumerate_stable_graphs,
    find_elliptic_tails,
    is_isomorphic,
    is_pseudostable,
    is_stable,
    t_equivalent,
    t_transform,
)
from .divisor_algebra import (
    DivisorClass,
    Model,
    linearization_class,
    log_canonical_divisor,
    proportionality_alpha,
)
from .fcurves import FCurve, enumerate_fcurves, gkm_nef_check, intersect
from .linear_series import (
    RegimeError,
    TailConfiguration,
    decomposition_identity,
    dimension_profile,
    h0_twisted,
    rank_kn,
    vanishing_sequence_head,
)
from .phase_analysis import (
    contracted_loci_description,
    critical_alphas,
    discrepancy_coefficient,
    pair_with_ray,
)
from .stack_descent import (
    RamifiedBoundary,
    coarse_coefficient,
    floor_identity_check,
    invariant_vanishing_order,
)

__version__ = "0.1.0"
