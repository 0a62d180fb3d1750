"""Exact order theory on finite carriers.

Preorders and posets as bitmask relation rows, explicit finite topologies,
bitopological preordered spaces with certified separation, cut completions,
way-below and ideal interpolation relations, and rational-valued
representing families.  Everything is computed exactly over Fractions and
cross-checked against brute-force definitions by the verification suites.
"""

from .order import (
    FinitePoset,
    FinitePreorder,
    QuotientMap,
    bits,
    full_mask,
    linear_extensions,
    mask_of,
    quotient,
    set_str,
    submasks,
    transitive_reflexive_closure,
)
from .topology import (
    BitopPreorderedSpace,
    FiniteTopology,
    InvalidMetricError,
    SeparationFailedError,
    SpaceCertificationError,
    canonical_space,
    extrema,
    find_normal_separation,
    from_quasi_pseudometric,
    from_specialization,
    generate_topology,
    hull_separation,
    is_closed_in_product,
    is_joincompact,
    is_lower_semicontinuous,
    is_monotone,
    is_upper_semicontinuous,
    join_topology,
    lower_topology,
    product_closedness_witness,
    product_separation,
    scott_topology,
    separate_points,
    specialization_order,
    urysohn_nachbin,
)
from .completion import (
    CutLattice,
    NotALatticeError,
    all_cuts_bruteforce,
    frink_ideals,
    ideal_way_below,
    ideal_way_below_matrix,
    is_complete_lattice,
    is_continuous_lattice,
    is_precontinuous,
    join_of,
    macneille,
    meet_of,
    precontinuity_completion_check,
    way_below,
    way_below_matrix,
)
from .representation import (
    NotClassConstantError,
    RoundtripReport,
    cone_invariance_check,
    converse_completion_witness,
    grid_family,
    is_multi_utility,
    is_rp_multi_utility,
    is_rp_utility,
    is_separating,
    lattice_closure,
    lattice_interpolate,
    lift_through_quotient,
    preorder_from_family,
    push_to_quotient,
    representation_roundtrip,
    rp_family_from_linear_extensions,
    scott_omega_rp_family,
    sup_norm_distance,
    threshold_topologies,
)
from .instances import (
    BitopCandidate,
    Instance,
    ParseError,
    canonical_candidate,
    emit_instance,
    enumerate_posets,
    enumerate_preorders,
    generate,
    parse_instance,
)
from .suites import Report, UnknownSuiteError, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "FinitePoset",
    "FinitePreorder",
    "QuotientMap",
    "bits",
    "full_mask",
    "linear_extensions",
    "mask_of",
    "quotient",
    "set_str",
    "submasks",
    "transitive_reflexive_closure",
    "BitopPreorderedSpace",
    "FiniteTopology",
    "InvalidMetricError",
    "SeparationFailedError",
    "SpaceCertificationError",
    "canonical_space",
    "extrema",
    "find_normal_separation",
    "from_quasi_pseudometric",
    "from_specialization",
    "generate_topology",
    "hull_separation",
    "is_closed_in_product",
    "is_joincompact",
    "is_lower_semicontinuous",
    "is_monotone",
    "is_upper_semicontinuous",
    "join_topology",
    "lower_topology",
    "product_closedness_witness",
    "product_separation",
    "scott_topology",
    "separate_points",
    "specialization_order",
    "urysohn_nachbin",
    "CutLattice",
    "NotALatticeError",
    "all_cuts_bruteforce",
    "frink_ideals",
    "ideal_way_below",
    "ideal_way_below_matrix",
    "is_complete_lattice",
    "is_continuous_lattice",
    "is_precontinuous",
    "join_of",
    "macneille",
    "meet_of",
    "precontinuity_completion_check",
    "way_below",
    "way_below_matrix",
    "NotClassConstantError",
    "RoundtripReport",
    "cone_invariance_check",
    "converse_completion_witness",
    "grid_family",
    "is_multi_utility",
    "is_rp_multi_utility",
    "is_rp_utility",
    "is_separating",
    "lattice_closure",
    "lattice_interpolate",
    "lift_through_quotient",
    "preorder_from_family",
    "push_to_quotient",
    "representation_roundtrip",
    "rp_family_from_linear_extensions",
    "scott_omega_rp_family",
    "sup_norm_distance",
    "threshold_topologies",
    "BitopCandidate",
    "Instance",
    "ParseError",
    "canonical_candidate",
    "emit_instance",
    "enumerate_posets",
    "enumerate_preorders",
    "generate",
    "parse_instance",
    "Report",
    "UnknownSuiteError",
    "run_suite",
    "suite_names",
]
