"""Weighted-poset and directed-graph metrics on binary n-space, the
constructions translating between them, perfect/packing/covering checkers
for the extended Hamming codes, and an exhaustive classification engine."""

from .bitvec import BitVector, add, enumerate_space, hamming_weight, support
from .classify import (
    ClassEntry,
    ClassificationReport,
    LabeledStructure,
    StructureVector,
    build_family_digraph,
    build_family_wposet,
    canonical_form,
    classify,
    enumerate_structures,
    relabel,
    search_labelings,
    solve_structure_vectors,
)
from .codes import (
    BinaryLinearCode,
    MetricContext,
    PerfectReport,
    check_perfect_conditions,
    check_weight4_partitions,
    codewords,
    covering_radius,
    extended_hamming,
    is_r_perfect,
    max_singleton_weight,
    min_hamming_distance,
    packing_radius,
)
from .digraph import (
    BlockMap,
    Digraph,
    condense,
    dominated_closure,
    expand,
    g_distance,
    g_sphere_size_formula,
    g_sphere_size_oracle,
    g_weight,
)
from .poset import (
    Poset,
    enumerate_order_ideals,
    ideal_closure,
    is_order_ideal,
    maximal_elements,
)
from .transfer import collapse, expand_vec, map_code_collapse, map_code_expand
from .wposet import (
    OmegaCensus,
    WeightedPoset,
    omega_census,
    sphere_size_formula,
    sphere_size_oracle,
    wp_distance,
    wp_weight,
)

__version__ = "0.1.0"
