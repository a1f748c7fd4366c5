"""Community search by density modularity."""
from .baselines import (
    CoreDecomposition,
    connected_supersets,
    core_decomposition,
    exact_dmcs,
    highest_core_search,
    kcore_search,
)
from .errors import *  # noqa: F401,F403
from .graph import (
    UNREACHABLE,
    DistanceIndex,
    Graph,
    articulation_nodes,
    as_nodeset,
    bfs_distances,
    connected_component_containing,
    induced_counts,
    load_edge_list,
)
from .metrics import EvalReport, ari, best_against_overlapping, binarize, fscore, nmi
from .modularity import (
    CommunityCounts,
    classic_modularity,
    counts_of,
    density_modularity,
    density_modularity_weighted,
    density_ratio,
    dm_gain,
    free_rider_pair_check,
    updated_density_modularity,
)
from .search import CommunityState, SearchResult, connect_queries, fpa, layer_prune, nca, remove_node
from .synth import GenConfig, planted_partition, ring_of_cliques

__version__ = "0.1.0"
