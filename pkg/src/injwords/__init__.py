"""Directed flag complexes, injective words, and moment-angle complex homology."""

from .complexes import (
    Cell,
    SimplicialCellComplex,
    directed_flag_complex,
    embed_into_injective_words,
    from_ordered_simplices,
    full_subcomplex,
    injective_words,
    relabel_vertices,
    with_ambient,
)
from .constructions import (
    boundary_facet_subcomplex,
    glue,
    iterated_shelling_glue,
    simplex_complex,
)
from .digraph import Digraph, complete_digraph, parse_edge_list, random_digraph, serialize_edge_list
from .facevec import check_h_identity, derangements, f_vector, h_vector
from .homology import (
    ChainComplex,
    GradedHomology,
    chain_complex,
    homology,
    reduced_homology,
    smith_normal_form,
)
from .moment_angle import (
    GradedBettiProfile,
    MomentAngleCell,
    cellular_betti,
    cellular_chain_complex,
    compare_methods,
    hochster_betti,
    wedge_profile,
)
from .shelling import ShellingReport, is_shelling, lex_facet_order, predicted_sphere_count

__all__ = [
    "Cell",
    "ChainComplex",
    "Digraph",
    "GradedBettiProfile",
    "GradedHomology",
    "MomentAngleCell",
    "ShellingReport",
    "SimplicialCellComplex",
    "boundary_facet_subcomplex",
    "cellular_betti",
    "cellular_chain_complex",
    "chain_complex",
    "check_h_identity",
    "compare_methods",
    "complete_digraph",
    "derangements",
    "directed_flag_complex",
    "embed_into_injective_words",
    "f_vector",
    "from_ordered_simplices",
    "full_subcomplex",
    "glue",
    "h_vector",
    "hochster_betti",
    "homology",
    "injective_words",
    "is_shelling",
    "iterated_shelling_glue",
    "lex_facet_order",
    "parse_edge_list",
    "predicted_sphere_count",
    "random_digraph",
    "reduced_homology",
    "relabel_vertices",
    "serialize_edge_list",
    "simplex_complex",
    "smith_normal_form",
    "with_ambient",
]
