"""Polyomino ideals over exact rationals.

Geometry (cells, edge intervals, inner intervals), structure classification
(convexity, simplicity, tree-likeness, leaf census), exact commutative
algebra (Buchberger, saturation, initial ideals), integer lattices (Hermite
and Smith normal forms, kernels), and the polyomino-specific layer: inner
minor ideals, admissible labelings, balancedness, primality, cycle binomials
and universal Groebner basis checks.
"""

from .certificates import balanced_certificate_treelike, expand_certificate
from .classify import (
    BAD,
    GOOD,
    LeafCensus,
    SimpleReport,
    TreeLikeReport,
    classify_leaf,
    connection_graph,
    is_column_convex,
    is_row_convex,
    is_simple,
    is_tree_like,
    leaf_census,
)
from .cycles import (
    Cycle,
    canonical_cycle,
    check_cycle,
    cycle_binomial,
    enumerate_cycles,
    extract_cycle,
    max_cycle_vertices,
)
from .errors import (
    BadCharacterError,
    BoundExceededError,
    CellNotInPolyominoError,
    EmptyInputError,
    InvalidCountError,
    NotALeafError,
    NotAdmissibleError,
    NotBalancedError,
    NotConnectedError,
    NotTreeLikeError,
    PolyominoError,
    StepLimitExceededError,
    ZeroLabelingError,
)
from .grid import (
    DIRECTIONS,
    HORIZONTAL,
    VERTICAL,
    CellInterval,
    EdgeInterval,
    Leaf,
    Point,
    Polyomino,
    cell_degree,
    cell_edges,
    cell_neighbors,
    cell_vertices,
    edge_interval_through,
    inner_intervals,
    leaves,
    maximal_cell_interval,
    maximal_edge_intervals,
    point_key,
    point_leq,
    polyomino_from_cells,
)
from .gridio import fuzz_conjecture, parse_grid, random_polyomino, render_grid
from .groebner import (
    buchberger,
    ideal_equal,
    initial_ideal,
    is_squarefree,
    normal_form,
    normal_form_with_quotients,
    quotient_dimension,
    s_polynomial,
    saturate,
)
from .ideals import (
    BalancedReport,
    OrderOutcome,
    UniversalGBReport,
    admissible_lattice,
    admissible_matrix,
    binomial_to_labeling,
    cell_lattice_basis,
    cell_vector,
    dimension,
    inner_minor,
    inner_minors,
    is_admissible,
    is_balanced,
    is_prime,
    labeling_binomial,
    labeling_vector,
    lattice_ideal,
    universal_gb_check,
    vector_binomial,
    vector_labeling,
)
from .intlinalg import (
    LatticeBasis,
    hermite_normal_form,
    int_det,
    invariant_factors,
    is_saturated,
    kernel_basis,
    lattice_coordinates,
    matrix_rank,
    smith_normal_form,
)
from .orders import (
    EliminationOrder,
    MonomialOrder,
    canonical_order,
    make_order,
    order_sample,
    parse_order_spec,
)
from .polynomials import (
    IdealGens,
    Polynomial,
    is_pure_difference,
    mono_degree,
    mono_divides,
    mono_gcd,
    mono_is_squarefree,
    mono_lcm,
    mono_mul,
    mono_one,
    polynomial_str,
)

__version__ = "0.1.0"
