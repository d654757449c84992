"""Subgroup constructions, their solvers, non-conjugacy certificates and the faithfulness probe."""

from .bs import BSHandle, embed_bs1n
from .certificates import EmbeddingFamily, NonconjugacyCertificate, nonconjugacy_certificate, nonconjugate_embeddings
from .free import embed_free
from .handles import DiagonalHandle, MultipushHandle, PushHandle, SubgroupHandle
from .indicable import END_FLUX_EXAMPLES, IndicableHandle, ell_handle, ell_weight_map, embed_indicable
from .notfree import notfree_family
from .probe import Divergence, ProbeReport, ball_chunks, faithfulness_probe, merge_chunks, probe_words
from .star import (
    RAAG_FAMILIES,
    ClaimedPresentation,
    StarFamily,
    StarHandle,
    claimed_presentation,
    claimed_raag_graph,
    cone,
    embed_star,
    induced_subgraph_subgroup,
    kernel_samples,
    nonadjacent_vertices,
    p4_free_product_example,
    raag_family,
    star_surface,
    star_weight_map,
)
from .wreath import WreathHandle, embed_wreath

__all__ = [
    "BSHandle",
    "ClaimedPresentation",
    "DiagonalHandle",
    "Divergence",
    "END_FLUX_EXAMPLES",
    "EmbeddingFamily",
    "IndicableHandle",
    "MultipushHandle",
    "NonconjugacyCertificate",
    "ProbeReport",
    "PushHandle",
    "RAAG_FAMILIES",
    "StarFamily",
    "StarHandle",
    "SubgroupHandle",
    "WreathHandle",
    "ball_chunks",
    "claimed_presentation",
    "claimed_raag_graph",
    "cone",
    "ell_handle",
    "ell_weight_map",
    "embed_bs1n",
    "embed_free",
    "embed_indicable",
    "embed_star",
    "embed_wreath",
    "faithfulness_probe",
    "induced_subgraph_subgroup",
    "kernel_samples",
    "merge_chunks",
    "nonadjacent_vertices",
    "nonconjugacy_certificate",
    "nonconjugate_embeddings",
    "notfree_family",
    "p4_free_product_example",
    "probe_words",
    "raag_family",
    "star_surface",
    "star_weight_map",
]
