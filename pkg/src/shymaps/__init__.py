"""Finite digital images and the maps between them.

A digital image is a finite set of integer lattice points together with an
adjacency relation.  This package decides continuity and shyness of maps
between such images, builds products, wedges, intervals, cycles and rooted
trees, and ships exhaustive audit suites that replay the structural theorems
about shy maps on small instances against independent oracles.
"""

from .core import (
    Adjacency,
    BoundExceeded,
    CUAdjacency,
    DigitalImage,
    ExplicitAdjacency,
    NormalProductAdjacency,
    Point,
    adjacent,
    adjacent_pairs,
    connected_components,
    connected_subsets,
    cu_adjacent,
    is_connected,
    is_connected_subset,
    neighbors,
    sets_adjacent,
    subimage,
)
from .maps import (
    DigitalFunction,
    MapClassification,
    MultiFunction,
    ShyFailure,
    classify,
    compose,
    connectivity_preserving_oracle,
    continuity_failure,
    continuity_oracle,
    has_weak_continuity,
    identity,
    inverse_multifunction,
    is_connectivity_preserving,
    is_continuous,
    is_injective,
    is_isomorphism,
    is_shy,
    is_surjective,
    shy_failure,
    shyness_oracle,
)
from .constructions import (
    RootedTree,
    WedgeDecomposition,
    interval,
    product_image,
    product_map,
    projections,
    rooted_tree,
    simple_closed_curve,
    three_branch_tree,
    wedge_image,
    wedge_map,
)
from .verify import (
    DEFAULT_ENUMERATION_BOUND,
    EnumerationSpec,
    VerificationReport,
    default_audit_reports,
    default_corpus,
    enumerate_maps,
    find_articulation_points,
    small_image_family,
    verify_composition_closure,
    verify_continuity_oracle_agreement,
    verify_cu_product_identity,
    verify_cut_vertex_bound,
    verify_equivalences,
    verify_equivalences_over_corpus,
    verify_isomorphism_laws,
    verify_monotone_characterization,
    verify_products_over_family,
    verify_product_theorem,
    verify_scc_image_bound,
    verify_shyness_oracle_agreement,
    verify_wedge_theorem,
    verify_wedges_over_lengths,
)

__version__ = "0.1.0"

__all__ = [
    "Adjacency",
    "BoundExceeded",
    "CUAdjacency",
    "DEFAULT_ENUMERATION_BOUND",
    "DigitalFunction",
    "DigitalImage",
    "EnumerationSpec",
    "ExplicitAdjacency",
    "MapClassification",
    "MultiFunction",
    "NormalProductAdjacency",
    "Point",
    "RootedTree",
    "ShyFailure",
    "VerificationReport",
    "WedgeDecomposition",
    "adjacent",
    "adjacent_pairs",
    "classify",
    "compose",
    "connected_components",
    "connected_subsets",
    "connectivity_preserving_oracle",
    "continuity_failure",
    "continuity_oracle",
    "cu_adjacent",
    "default_audit_reports",
    "default_corpus",
    "enumerate_maps",
    "find_articulation_points",
    "has_weak_continuity",
    "identity",
    "interval",
    "inverse_multifunction",
    "is_connected",
    "is_connected_subset",
    "is_connectivity_preserving",
    "is_continuous",
    "is_injective",
    "is_isomorphism",
    "is_shy",
    "is_surjective",
    "neighbors",
    "product_image",
    "product_map",
    "projections",
    "rooted_tree",
    "sets_adjacent",
    "shy_failure",
    "shyness_oracle",
    "simple_closed_curve",
    "small_image_family",
    "subimage",
    "three_branch_tree",
    "verify_composition_closure",
    "verify_continuity_oracle_agreement",
    "verify_cu_product_identity",
    "verify_cut_vertex_bound",
    "verify_equivalences",
    "verify_equivalences_over_corpus",
    "verify_isomorphism_laws",
    "verify_monotone_characterization",
    "verify_product_theorem",
    "verify_products_over_family",
    "verify_scc_image_bound",
    "verify_shyness_oracle_agreement",
    "verify_wedge_theorem",
    "verify_wedges_over_lengths",
    "wedge_image",
    "wedge_map",
]
