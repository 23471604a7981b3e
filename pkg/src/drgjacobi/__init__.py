"""Distance-regular graphs, their intersection sequences, and the
tridiagonal (Jacobi) realization of the adjacency operator.

The pipeline: certify a graph as distance-regular, extract its
intersection sequence, build the one-parameter family of tridiagonal
completions J_tau, and reconstruct the adjacency spectrum and spectral
measure from the canonical completion. Infinite-diameter families are
handled through corner truncations and exact integer moments.
"""

from .families import (
    FamilyGenerator,
    QuadratureNotConvergedError,
    density_moment,
    family_from_name,
    kesten_mckay_density,
    moment,
    spectral_radius_tree,
    tree_sequence,
    truncated_jacobi,
)
from .graphs import (
    DistanceKMatrix,
    Graph,
    GraphError,
    MalformedLineError,
    NotConnectedError,
    OddPairCountError,
    SelfLoopError,
    bfs_distances,
    degree_k,
    diameter,
    distance_k_matrix,
    graph_from_edges,
    graph_from_name,
    isoscycle_count,
    parse_edge_list,
)
from .intersection import (
    IntersectionSequence,
    NonIntegralCountError,
    NonIntegralDegreeError,
    NonRegularityWitness,
    RecurrenceCheck,
    SequenceError,
    TooSmallError,
    certify_distance_regular,
    degree_sequence,
    distance_poly_eval,
    isoscycle_numbers,
    sequence_from_pairs,
    verify_recurrence,
)
from .jacobi import (
    FirstKindEvaluation,
    JacobiError,
    JacobiOperator,
    KernelMismatchError,
    MultiplicityNotIntegralError,
    NotAnEigenvalueError,
    SpectralAtom,
    SpectralMeasure,
    ToleranceTooSmallError,
    WeightMismatchError,
    atom_weight,
    build_jacobi,
    canonical_tau,
    cd_kernel,
    check_interlacing,
    eigenfunction_coeffs,
    eigenvalues,
    eval_first_kind,
    spectral_measure,
    weight_formulas,
)

__version__ = "0.1.0"

__all__ = [
    "DistanceKMatrix",
    "FamilyGenerator",
    "FirstKindEvaluation",
    "Graph",
    "GraphError",
    "IntersectionSequence",
    "JacobiError",
    "JacobiOperator",
    "KernelMismatchError",
    "MalformedLineError",
    "MultiplicityNotIntegralError",
    "NonIntegralCountError",
    "NonIntegralDegreeError",
    "NonRegularityWitness",
    "NotAnEigenvalueError",
    "NotConnectedError",
    "OddPairCountError",
    "QuadratureNotConvergedError",
    "RecurrenceCheck",
    "SelfLoopError",
    "SequenceError",
    "SpectralAtom",
    "SpectralMeasure",
    "ToleranceTooSmallError",
    "TooSmallError",
    "WeightMismatchError",
    "atom_weight",
    "bfs_distances",
    "build_jacobi",
    "canonical_tau",
    "cd_kernel",
    "certify_distance_regular",
    "check_interlacing",
    "degree_k",
    "degree_sequence",
    "density_moment",
    "diameter",
    "distance_k_matrix",
    "distance_poly_eval",
    "eigenfunction_coeffs",
    "eigenvalues",
    "eval_first_kind",
    "family_from_name",
    "graph_from_edges",
    "graph_from_name",
    "isoscycle_count",
    "isoscycle_numbers",
    "kesten_mckay_density",
    "moment",
    "parse_edge_list",
    "sequence_from_pairs",
    "spectral_measure",
    "spectral_radius_tree",
    "tree_sequence",
    "truncated_jacobi",
    "verify_recurrence",
    "weight_formulas",
]
