"""Multigraded Betti numbers and Betti splittings of monomial ideals.

Exact computation over the rationals and over prime fields, splitting
detection (variable partitions, support-disjointness conditions,
Eliahou-Kervaire splitting functions), and the graph-side constructions:
edge ideals, cover ideals, and the recursive resolution of cover ideals of
Cohen-Macaulay bipartite graphs.
"""

from .betti import (
    BettiTable,
    CapacityError,
    betti_diagram,
    betti_table,
    betti_table_taylor,
    char_scan,
    format_betti_table,
    graded_betti,
    has_linear_resolution,
    k_polynomial_check,
    proj_dim,
    regularity,
    total_betti,
    upper_koszul,
)
from .graphs import (
    BipartiteLabeledGraph,
    GraphFormatError,
    InvalidLabelingError,
    SimpleGraph,
    cm_bipartite_random,
    cm_pd_reg_check,
    cover_betti_recursive,
    cover_ideal,
    cover_splitting_parts,
    edge_ideal,
    edge_ideal_split,
    format_graph,
    herzog_hibi_validate,
    minimal_vertex_covers,
    parse_graph,
    relabel_to_canonical,
    splitting_vertices,
    three_disjoint_number,
)
from .homology import (
    F2,
    QQ,
    FieldSpec,
    SimplicialComplex,
    matrix_rank,
    reduced_homology_ranks,
)
from .ideals import (
    DimensionMismatchError,
    IdealFormatError,
    LcmLattice,
    Monomial,
    MonomialIdeal,
    borel_closure,
    divides,
    format_ideal,
    format_monomial,
    intersect,
    lcm_lattice,
    membership,
    minimalize,
    monomial_lcm,
    parse_ideal,
    parse_monomial,
    strictly_divides,
)
from .splitting import (
    DegeneratePartitionError,
    Partition,
    SplitReport,
    SplittingFunction,
    SplittingFunctionSearch,
    disjoint_support_condition,
    find_splitting_function,
    is_betti_splitting,
    mapping_cone_bound,
    one_sided_support_condition,
    partition_report,
    reg_pd_via_splitting,
    scan_variable_splittings,
    variable_partition,
)

__version__ = "0.1.0"
