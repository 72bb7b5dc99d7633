"""qagraph: graph analytics for Q&A-community networks.

Ingests Stack Exchange-style post dumps and SNAP edge lists, computes
centrality / community / link-prediction / spectral suites, and emits
deterministic reports and visualization exports.
"""

from ._kernels import COMPILED as KERNELS_COMPILED
from ._kernels import ENGINE as KERNEL_ENGINE
from .centrality import (
    Measure,
    PathResult,
    ScoreMap,
    betweenness_centrality,
    closeness_centrality,
    clustering_coefficient,
    degree_centrality,
    diameter_path,
    eigenvector_centrality,
    pagerank,
    shortest_path,
    top_k,
)
from .community import (
    CommunityMethod,
    Dendrogram,
    GNStep,
    Partition,
    canonicalize,
    girvan_newman,
    label_propagation,
    louvain,
    modularity,
)
from .errors import (
    ComputationError,
    ConflictError,
    ConvergenceError,
    DanglingEdgeError,
    DataError,
    DomainError,
    FormatMismatchError,
    NoPathError,
    NotFoundError,
    ParseError,
    QagraphError,
    UnsupportedInputError,
)
from .graph import Edge, EdgeKind, Graph, NodeKind
from .ingest import (
    Dataset,
    PostRecord,
    PostType,
    build_tag_cooccurrence_graph,
    build_user_interaction_graph,
    load_edge_list,
    parse_posts,
)
from .linkpred import CandidateScore, LinkMetric, adamic_adar, jaccard, top_candidates
from .report import (
    Report,
    Section,
    centrality_report,
    degree_distribution,
    export_graph,
    graph_to_text,
    render,
    top_tags,
    unanswered_by_tag,
    users_answering_in_tag,
)
from .sampling import (
    SampleMethod,
    SampleSpec,
    random_sample,
    snowball_sample,
    stratified_sample,
)
from .spectral import (
    SpectralFeatures,
    adjacency_matrix,
    algebraic_connectivity,
    bethe_hessian,
    classify,
    directed_combinatorial_laplacian,
    directed_laplacian,
    fiedler_vector,
    graph_embedding,
    incidence_matrix,
    laplacian,
    normalized_laplacian,
    spectral_ordering,
)

__version__ = "0.1.0"
