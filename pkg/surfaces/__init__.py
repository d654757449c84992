"""End spaces, classification quadruples and Schreier surfaces."""

from .ends import (
    EMPTY_ENDS,
    INCOMPARABLE,
    Cantor,
    DisjointUnion,
    EndDescriptor,
    Finite,
    GraphEnds,
    Incomparable,
    OmegaPlusOne,
    ZTwoPoint,
    cardinality,
    equal,
    from_tag,
    parse_ends,
    planar_count,
    to_text,
    union,
)
from .invariants import (
    ComplementRecord,
    FamilyFlags,
    canonical_omission,
    complement_invariant,
    distinguished_conditions,
    distinguishes,
    family_membership,
)
from .schreier_surface import SchreierSurfaceSpec, classify
from .surface_type import (
    SURFACE_CATALOG,
    ClosureKind,
    DomainKind,
    PiSpec,
    SurfaceType,
    Symbolic,
    blooming_cantor_tree,
    cantor_tree,
    closed_surface,
    closure_of_compact_support,
    flute,
    handle,
    is_infinite_type,
    ladder,
    loch_ness_monster,
    one_holed_torus,
    punctured_sphere,
    push_domain_type,
    sphere,
)

__all__ = [
    "Cantor",
    "ClosureKind",
    "ComplementRecord",
    "DisjointUnion",
    "DomainKind",
    "EMPTY_ENDS",
    "EndDescriptor",
    "FamilyFlags",
    "Finite",
    "GraphEnds",
    "INCOMPARABLE",
    "Incomparable",
    "OmegaPlusOne",
    "PiSpec",
    "SURFACE_CATALOG",
    "SchreierSurfaceSpec",
    "SurfaceType",
    "Symbolic",
    "ZTwoPoint",
    "blooming_cantor_tree",
    "canonical_omission",
    "cantor_tree",
    "cardinality",
    "classify",
    "closed_surface",
    "closure_of_compact_support",
    "complement_invariant",
    "distinguished_conditions",
    "distinguishes",
    "equal",
    "family_membership",
    "flute",
    "from_tag",
    "handle",
    "is_infinite_type",
    "ladder",
    "loch_ness_monster",
    "one_holed_torus",
    "parse_ends",
    "planar_count",
    "punctured_sphere",
    "push_domain_type",
    "sphere",
    "to_text",
    "union",
]
