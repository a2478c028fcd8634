"""Degree centrality for multiplex (multilayer) networks.

Three views of actor importance on a network whose layers share actors:
union-flattened aggregate degree, per-layer degree, and the multidegree of
the supra-adjacency matrix with categorical interlayer coupling.
"""

__version__ = "0.1.0"

from .analysis import (
    DegreeRow,
    DegreeTable,
    HistogramSeries,
    RankingEntry,
    RoleRecord,
    approach1_aggregate_degrees,
    approach2_per_layer_degrees,
    approach3_multilayer_degrees,
    approach_scores,
    comparison_table,
    degree_table,
    histogram_data,
    rank_top_k,
    union_flatten,
)
from .errors import (
    DimensionMismatch,
    DuplicateLayer,
    EmptyInput,
    InvalidArgument,
    InvalidWeight,
    IoFailure,
    MuxdegError,
    NotFound,
    ParseFailure,
    SchemaMismatch,
    SelfLoopForbidden,
)
from .ingest import (
    LayerSourceSpec,
    ValidationReport,
    export_results,
    load_network,
    load_roles,
    render_results,
    validation_report,
    write_edge_list,
)
from .network import EdgeRecord, LayerId, MultiplexNetwork, PresenceProfile
from .tensor import (
    CouplingBlock,
    DegreeVector,
    LayerAdjacency,
    SupraAdjacency,
    assemble_supra,
    coo_dump,
    coupling_block,
    degree_vector,
    layer_adjacency,
    multidegree,
    overlay_network,
    project_single_layer,
)
