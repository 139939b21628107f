"""Workbench for minimum shortest-path union covers of graphs and networks.

Computes exact weak and strong cover optima, generates the graph families and
interconnection topologies the claims registry talks about, evaluates the
general bound battery, builds vertex-cover reduction gadgets, and verifies
claimed closed-form values against exact solves.
"""

from .claims import (
    ClaimRecord,
    DiscrepancyReport,
    claim_value,
    claims_registry,
    verify_claims,
)
from .cover import (
    StrongWitness,
    format_witness,
    parse_witness,
    strong_feasible,
    verify_strong_witness,
    verify_weak_cover,
    weak_cover_set,
)
from .families import (
    FAMILY_NAMES,
    FamilyParamError,
    FamilySpec,
    UnknownFamilyError,
    expected_size,
    generate,
)
from .graph import (
    DisconnectedGraphError,
    DistanceField,
    DuplicateEdgeError,
    EnumerationCapError,
    GeodesicDag,
    Graph,
    GraphError,
    SelfLoopError,
    UNREACHABLE,
    VertexRangeError,
    bfs_distances,
    build_graph,
    count_geodesics,
    diameter,
    eccentricity,
    enumerate_geodesics,
    format_edgelist,
    geodesic_dag,
    is_connected,
    maximal_cliques,
    parse_edgelist,
    simplicial_vertices,
)
from .reduction import (
    ReductionCheck,
    ReductionOutput,
    check_reduction,
    gadget_size_formulas,
    reduce_vc,
    vertex_cover_exact,
)
from .solve import (
    Bounds,
    DEFAULT_LIMITS,
    STRONG,
    SizeLimitError,
    SolveResult,
    SolverLimits,
    WEAK,
    compute_bounds,
    domination_number,
    naive_oracle,
    solve_exact,
    solve_greedy,
)

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "ClaimRecord",
    "DEFAULT_LIMITS",
    "DiscrepancyReport",
    "DisconnectedGraphError",
    "DistanceField",
    "DuplicateEdgeError",
    "EnumerationCapError",
    "FAMILY_NAMES",
    "FamilyParamError",
    "FamilySpec",
    "GeodesicDag",
    "Graph",
    "GraphError",
    "ReductionCheck",
    "ReductionOutput",
    "STRONG",
    "SelfLoopError",
    "SizeLimitError",
    "SolveResult",
    "SolverLimits",
    "StrongWitness",
    "UNREACHABLE",
    "UnknownFamilyError",
    "VertexRangeError",
    "WEAK",
    "bfs_distances",
    "build_graph",
    "check_reduction",
    "claim_value",
    "claims_registry",
    "compute_bounds",
    "count_geodesics",
    "diameter",
    "domination_number",
    "eccentricity",
    "enumerate_geodesics",
    "expected_size",
    "format_edgelist",
    "format_witness",
    "gadget_size_formulas",
    "generate",
    "geodesic_dag",
    "is_connected",
    "maximal_cliques",
    "naive_oracle",
    "parse_edgelist",
    "parse_witness",
    "reduce_vc",
    "simplicial_vertices",
    "solve_exact",
    "solve_greedy",
    "strong_feasible",
    "verify_claims",
    "verify_strong_witness",
    "verify_weak_cover",
    "vertex_cover_exact",
    "weak_cover_set",
]
