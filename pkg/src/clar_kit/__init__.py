"""Clar numbers of catacondensed benzenoid graphs.

Build benzenoids from attachment-coded dualist trees, compute Clar numbers
with checkable certificates, and generate the extremal family attaining
``Cl(B) = floor((2n+1)/3)``.
"""

from .benzenoid import (
    Attachment,
    BenzenoidGraph,
    BenzenoidSpec,
    HexagonKind,
    build_benzenoid,
    canonical_code,
    canonical_spec,
    dualist_tree,
    free_edges,
    hexagon_kind,
    is_catacondensed,
    spec_from_graph,
)
from .clar import ClarCertificate, clar_bounds, clar_number, clar_number_bruteforce, clar_upper_bound
from .errors import ClarKitError, Infeasible, InvalidArgument, InvalidSpec, NotCatacondensed, ResourceLimit
from .extremal import (
    angular_tk_spec,
    append_linear_chain,
    construct_with_clar,
    enumerate_catacondensed,
    gen_family_b,
    is_in_family_b,
    tk_extremal_check,
    verify_main_theorem,
)
from .matching import (
    PerfectMatching,
    alternating_hexagons,
    enumerate_perfect_matchings,
    has_perfect_matching,
    matching_after_removal,
)
from .render import render_ascii
from .trees import (
    SubcubicTree,
    TkDescriptor,
    TreeClassification,
    TreeKind,
    alpha,
    classify_extremal_tree,
    enumerate_mis,
    independence_bound,
    is_tk,
    leaf_containing_mis,
    make_tk,
    vertex_cover_size,
)

__all__ = [
    "alpha",
    "alternating_hexagons",
    "angular_tk_spec",
    "append_linear_chain",
    "Attachment",
    "BenzenoidGraph",
    "BenzenoidSpec",
    "build_benzenoid",
    "canonical_code",
    "canonical_spec",
    "clar_bounds",
    "clar_number",
    "clar_number_bruteforce",
    "clar_upper_bound",
    "ClarCertificate",
    "ClarKitError",
    "classify_extremal_tree",
    "construct_with_clar",
    "dualist_tree",
    "enumerate_catacondensed",
    "enumerate_mis",
    "enumerate_perfect_matchings",
    "free_edges",
    "gen_family_b",
    "has_perfect_matching",
    "hexagon_kind",
    "HexagonKind",
    "independence_bound",
    "Infeasible",
    "InvalidArgument",
    "InvalidSpec",
    "is_catacondensed",
    "is_in_family_b",
    "is_tk",
    "leaf_containing_mis",
    "make_tk",
    "matching_after_removal",
    "NotCatacondensed",
    "PerfectMatching",
    "render_ascii",
    "ResourceLimit",
    "spec_from_graph",
    "SubcubicTree",
    "tk_extremal_check",
    "TkDescriptor",
    "TreeClassification",
    "TreeKind",
    "verify_main_theorem",
    "vertex_cover_size",
]

__version__ = "0.1.0"
