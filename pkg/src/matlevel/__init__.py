"""Levelness, Theta-rank bounds, and psd-minimality certificates for
matroid base configurations.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .certificates import (
    HrkOutcome,
    QRoot2,
    SosOutcome,
    hadamard_min_rank,
    psd_minimality_verdict,
    sos_feasible,
    theta_rank_estimate,
    verify_identity_w4,
)
from .constructions import (
    DecompositionTree,
    decompose,
    direct_sum,
    is_two_level_by_decomposition,
    parallel_connection,
    series_connection,
    two_sum,
)
from .enumeration import (
    MinorWitness,
    enumerate_all_matroids,
    enumerate_matroids,
    graph_excluded_minor_check,
    has_minor,
    is_two_level_by_minors,
    minimally_k_level,
    verify_size_bound,
)
from .geometry import (
    FacetDescriptor,
    PointConfig,
    SlackMatrix,
    base_configuration,
    face_restriction,
    flacets,
    k_sequence,
    levelness,
    point_config,
    projection_to,
    slack_matrix,
)
from .graphs import (
    Graph,
    cone,
    cycle_graph,
    graph,
    graphic_matroid,
    is_biconnected,
    is_minimally_biconnected,
    is_series_parallel,
    minimally_biconnected_graphs,
)
from .ideals import (
    GroebnerData,
    generation_degree_at_most,
    separation_degree,
    theta_lower_bound_from_separation,
    vanishing_ideal,
)
from .matroid import (
    ConnectivityReport,
    Matroid,
    SubsetRankReport,
    catalog,
    circuits,
    connectivity,
    contract,
    delete,
    dual,
    from_bases,
    is_isomorphic,
    minor,
    subset_rank,
    uniform,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConnectivityReport",
    "DecompositionTree",
    "FacetDescriptor",
    "Graph",
    "GroebnerData",
    "HrkOutcome",
    "KERNEL_BACKEND",
    "Matroid",
    "MinorWitness",
    "PointConfig",
    "QRoot2",
    "SlackMatrix",
    "SosOutcome",
    "SubsetRankReport",
    "base_configuration",
    "catalog",
    "circuits",
    "cone",
    "connectivity",
    "contract",
    "cycle_graph",
    "decompose",
    "delete",
    "direct_sum",
    "dual",
    "enumerate_all_matroids",
    "enumerate_matroids",
    "face_restriction",
    "flacets",
    "from_bases",
    "generation_degree_at_most",
    "graph",
    "graph_excluded_minor_check",
    "graphic_matroid",
    "hadamard_min_rank",
    "has_minor",
    "is_biconnected",
    "is_isomorphic",
    "is_minimally_biconnected",
    "is_series_parallel",
    "is_two_level_by_decomposition",
    "is_two_level_by_minors",
    "k_sequence",
    "levelness",
    "minimally_biconnected_graphs",
    "minimally_k_level",
    "minor",
    "parallel_connection",
    "point_config",
    "projection_to",
    "psd_minimality_verdict",
    "separation_degree",
    "series_connection",
    "slack_matrix",
    "sos_feasible",
    "subset_rank",
    "theta_lower_bound_from_separation",
    "theta_rank_estimate",
    "two_sum",
    "uniform",
    "vanishing_ideal",
    "verify_identity_w4",
    "verify_size_bound",
]
