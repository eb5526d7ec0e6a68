"""Weighted r-path ideals: decompositions, vertex covers and Cohen-Macaulay tests."""

from .cm import (
    CmVerdict,
    NoCharacterizationError,
    clique3_cm,
    clique_mixedness_shortcut,
    cm_auto,
    cm_clique_r2,
    cm_tree,
)
from .covers import (
    component_to_cover,
    cover_to_component,
    is_cover,
    is_unmixed,
    minimal_covers,
    reduce_to_minimal,
)
from .graph import (
    SuspensionWitness,
    WeightedGraph,
    classify,
    detect_r_path_suspension,
    enumerate_r_paths,
    induced_subgraph,
    is_r_pathless_leaf,
    prune_pathless_leaves,
)
from .monomial import (
    MIrredComponent,
    Monomial,
    MonomialIdeal,
    colon,
    contains,
    divides,
    gcd,
    ideal_sum,
    intersect,
    is_m_unmixed,
    krull_dimension_of_quotient,
    lcm,
    m_irreducible_decompose,
    minimalize,
    polarize,
)
from .path_ideal import Combiner, build_path_ideal, locality_check, path_monomial
from .reisner import (
    SimplicialComplex,
    SizeGuardError,
    is_cm_rational,
    reduced_homology_ranks,
    stanley_reisner_complex,
)

__version__ = "0.1.0"
