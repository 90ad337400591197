"""Recognition, clique algorithms, generators and a compact codec for
(C4, diamond)-free graphs."""

from .cliques import (
    CliqueSet,
    CliqueStats,
    NotDiamondFree,
    brute_force_cliques,
    clique_stats,
    cliques_at_vertex,
    cliques_touching_ball,
    cut_edge_count,
    enumerate_maximal_cliques,
    max_clique,
)
from .codec import decode_graph, encode_graph, encoded_size_report
from .generators import named_graph, projective_plane_graph, random_free_graph
from .graph import (
    BfsLayers,
    CliquePartition,
    Graph,
    NotInClass,
    P3,
    ParseError,
    adjacency_query,
    bfs_layers,
    common_neighbors,
    disjoint_clique_partition,
    induced_subgraph,
    parse_graph,
    serialize_graph,
)
from .recognition import (
    Kind,
    RecognitionConfig,
    Verdict,
    find_witness_kind,
    recognize,
    recognize_mdelta,
    recognize_naive,
    recognize_threshold,
)

__version__ = "0.1.0"
