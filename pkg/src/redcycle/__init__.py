"""Quiver mutation, reddening sequences, and mutation cycles."""

from .errors import RedcycleError
from .permutation import Permutation
from .quiver import (
    INT_LIMIT,
    MutationSequence,
    Quiver,
    find_isomorphism,
    inverse_sequence,
    is_reduced,
    reduce_sequence,
)
from .framing import CMatrix, Color, c_matrix, coframed, framed, vertex_color
from .reddening import (
    conjugate_reddening,
    is_maximal_green,
    is_reddening,
    source_sequence,
)
from .classify import (
    ClassificationReport,
    ForklessReport,
    canonical_form,
    classify,
    forkless_explore,
    is_abundant,
    is_acyclic,
)
from .extcycles import (
    CycleReport,
    ExtensionSpec,
    build_acyclic_cycle,
    build_cycle_equal,
    build_cycle_general,
    cross_block,
    is_distinguishing,
    predicted_cross_block,
    triangular_extension,
    verify_cycle,
)
from .search import ClassEnumeration, SearchResult, enumerate_class, search_reddening
from .catalog import (
    CatalogItem,
    box_quiver,
    catalog_names,
    chebyshev_u,
    dreaded_torus,
    fordy_marsh,
    grid_quiver,
    grid_reddening,
    catalog_item,
    punctured_sphere,
    punctured_sphere_names,
)

__all__ = [
    "CMatrix",
    "ClassEnumeration",
    "ClassificationReport",
    "Color",
    "CycleReport",
    "ExtensionSpec",
    "ForklessReport",
    "INT_LIMIT",
    "MutationSequence",
    "CatalogItem",
    "Permutation",
    "Quiver",
    "RedcycleError",
    "SearchResult",
    "box_quiver",
    "build_acyclic_cycle",
    "build_cycle_equal",
    "build_cycle_general",
    "c_matrix",
    "canonical_form",
    "catalog_names",
    "chebyshev_u",
    "classify",
    "coframed",
    "conjugate_reddening",
    "cross_block",
    "dreaded_torus",
    "enumerate_class",
    "find_isomorphism",
    "fordy_marsh",
    "forkless_explore",
    "framed",
    "grid_quiver",
    "grid_reddening",
    "inverse_sequence",
    "is_abundant",
    "is_acyclic",
    "is_distinguishing",
    "is_maximal_green",
    "is_reddening",
    "is_reduced",
    "catalog_item",
    "predicted_cross_block",
    "punctured_sphere",
    "punctured_sphere_names",
    "reduce_sequence",
    "search_reddening",
    "source_sequence",
    "triangular_extension",
    "verify_cycle",
    "vertex_color",
]
