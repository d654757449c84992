"""Spec document models and the builder that resolves them."""

from .base import SpecModel
from .builder import SpecBuilder, node_label, surface_type
from .document import SpecDocument
from .entries import (
    BSGroupEntry,
    CatalogGraphEntry,
    CayleyGraphEntry,
    ClaimedRaagEntry,
    CycleGraphEntry,
    CyclicGroupEntry,
    ExplicitGraphEntry,
    FreeAbelianGroupEntry,
    FreeGroupEntry,
    KernelCosetGraphEntry,
    OmegaEntry,
    OpaqueGroupEntry,
    ProductGroupEntry,
    RaagGroupEntry,
    SchreierSurfaceEntry,
    SurfaceEntry,
)
from .systems import (
    BSSystemEntry,
    CertifyQuery,
    ClassifyQuery,
    EvalQuery,
    ExplicitPushSystemEntry,
    FactorEntry,
    FreeSystemEntry,
    IndicableSystemEntry,
    ProbeQuery,
    StarSystemEntry,
    WreathSystemEntry,
)

__all__ = [
    "BSGroupEntry",
    "BSSystemEntry",
    "CatalogGraphEntry",
    "CayleyGraphEntry",
    "CertifyQuery",
    "ClaimedRaagEntry",
    "ClassifyQuery",
    "CycleGraphEntry",
    "CyclicGroupEntry",
    "EvalQuery",
    "ExplicitGraphEntry",
    "ExplicitPushSystemEntry",
    "FactorEntry",
    "FreeAbelianGroupEntry",
    "FreeGroupEntry",
    "FreeSystemEntry",
    "IndicableSystemEntry",
    "KernelCosetGraphEntry",
    "OmegaEntry",
    "OpaqueGroupEntry",
    "ProbeQuery",
    "ProductGroupEntry",
    "RaagGroupEntry",
    "SchreierSurfaceEntry",
    "SpecBuilder",
    "SpecDocument",
    "SpecModel",
    "StarSystemEntry",
    "SurfaceEntry",
    "WreathSystemEntry",
    "node_label",
    "surface_type",
]
