"""danforge: bounded-degree demand-aware network design.

Given a normalized communication demand over node pairs and a degree
budget, build host networks with short expected path length, verify them
against conditional-entropy lower bounds and brute-force optima, and
measure spanner distortion.
"""

from .bounds import (
    BoundReport,
    OracleResult,
    brute_force_bnd,
    entropy_lower_bound,
    exhaustive_prefix_code,
)
from .construct import (
    BuildReport,
    ReductionCertificate,
    build_dary_dan,
    build_sparse_dan,
    build_tree_dan,
    reduce_degree,
    spanner_to_dan,
)
from .demand import (
    Demand,
    DemandFlags,
    Distribution,
    EntropyStats,
    classify,
    conditional_dist,
    conditional_entropy,
    demand_from_dict,
    demand_to_dict,
    entropy,
    entropy_stats,
    load_demand,
    marginals,
    normalize,
    save_demand,
)
from .errors import (
    BadArity,
    BadBase,
    BadSpec,
    DanforgeError,
    EmptyDemand,
    ItemNotInTree,
    NoMass,
    NotConnected,
    SelfLoop,
    ShapeMismatch,
    TooLarge,
    WrongFamily,
)
from .estimators import (
    DaryDanBuilder,
    GreedySpannerBuilder,
    HypercubeSpannerBuilder,
    LddSpannerBuilder,
    SparseDanBuilder,
    SpannerDanBuilder,
    TreeDanBuilder,
    check_demand,
    check_graph,
)
from .generators import FAMILIES, GenSpec, family_spanner, generate
from .netgraph import (
    INFINITE,
    DistortionReport,
    HostNetwork,
    all_pairs_distortion,
    bfs_distances,
    degree_stats,
    demand_support,
    distortion_report,
    epl,
    graph_from_text,
    graph_to_text,
    load_graph,
    neighborhood_distortion,
    save_graph,
)
from .spanners import (
    Clustering,
    SpannerResult,
    build_2net,
    build_ldd_spanner,
    greedy_spanner,
    hypercube_graph,
    hypercube_spanner,
    local_doubling_estimate,
)
from .trees import (
    RootedTree,
    balanced_tree,
    huffman_dary,
    promote_leaves,
    rooted_epl,
)
from .workbench import SUITES, BenchRecord, records_to_csv, run_suite

__version__ = "0.1.0"
