"""Node-importance measures and shortest-path queries.

Weighted graphs treat weights as distances for path-based measures; when all
edge weights are equal the BFS fast path is used. Betweenness runs through
the Brandes kernels in :mod:`qagraph._kernels`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from heapq import heappop, heappush

import numpy as np

from . import _kernels
from .errors import ConvergenceError, DomainError, NoPathError
from .graph import Graph

_EPS = 1e-12


class Measure(Enum):
    DEGREE = "degree"
    BETWEENNESS = "betweenness"
    CLOSENESS = "closeness"
    EIGENVECTOR = "eigenvector"
    PAGERANK = "pagerank"
    CLUSTERING = "clustering"


@dataclass
class ScoreMap:
    scores: dict[int, float]
    measure: Measure
    normalized: bool


@dataclass
class PathResult:
    src: int
    dst: int
    length: float
    nodes: list[int]


def degree_centrality(graph: Graph) -> ScoreMap:
    """degree/(n-1); a single-node graph scores 0."""
    n = graph.node_count
    denom = n - 1
    scores = {}
    for v in graph.node_ids():
        scores[v] = graph.degree(v) / denom if denom > 0 else 0.0
    return ScoreMap(scores, Measure.DEGREE, normalized=True)


def betweenness_centrality(graph: Graph, normalized: bool = True) -> ScoreMap:
    """Brandes betweenness; normalization by (n-1)(n-2), halved if undirected."""
    raw = _kernels.node_betweenness(graph)
    n = graph.node_count
    if normalized:
        denom = (n - 1) * (n - 2)
        if not graph.directed:
            denom /= 2
        if denom > 0:
            raw = {v: s / denom for v, s in raw.items()}
    return ScoreMap(raw, Measure.BETWEENNESS, normalized=normalized)


def closeness_centrality(graph: Graph) -> ScoreMap:
    """Component-scaled closeness: ((r-1)/sum_d) * ((r-1)/(n-1)) over the
    reachable set of each node; isolated nodes score 0."""
    csr = _kernels.build_connection_csr(graph)
    n = csr.n
    scores = {}
    for i, v in enumerate(csr.ids):
        dist = _sssp(csr, i, reverse=False)
        reach = [d for d in dist if d < math.inf]
        r = len(reach)
        total = sum(reach)
        if n > 1 and r > 1 and total > 0:
            scores[v] = ((r - 1) / total) * ((r - 1) / (n - 1))
        else:
            scores[v] = 0.0
    return ScoreMap(scores, Measure.CLOSENESS, normalized=True)


def eigenvector_centrality(graph: Graph, tol: float = 1e-8,
                           max_iter: int = 1000) -> ScoreMap:
    """Dominant adjacency eigenvector by shifted power iteration (A + I keeps
    bipartite graphs from oscillating). In-edges confer score on directed
    graphs. Entries are nonnegative with unit Euclidean norm."""
    if graph.node_count == 0:
        raise DomainError("eigenvector centrality undefined on the empty graph")
    if graph.edge_count == 0:
        raise ConvergenceError("graph has no edges; adjacency has no dominant direction")
    ids, src, dst, w = _edge_arrays(graph)
    n = len(ids)
    x = np.full(n, 1.0 / math.sqrt(n))
    delta = math.inf
    for _ in range(max_iter):
        nxt = x.copy()
        np.add.at(nxt, dst, w * x[src])
        nxt /= np.linalg.norm(nxt)
        delta = float(np.linalg.norm(nxt - x))
        x = nxt
        if delta <= tol:
            return ScoreMap({v: float(x[i]) for i, v in enumerate(ids)},
                            Measure.EIGENVECTOR, normalized=True)
    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} iterations", residual=delta)


def pagerank(graph: Graph, damping: float = 0.85, tol: float = 1e-10,
             max_iter: int = 200) -> ScoreMap:
    """Out-weight-proportional PageRank; dangling mass is spread uniformly
    over all nodes. Scores sum to 1."""
    if graph.node_count == 0:
        raise DomainError("pagerank undefined on the empty graph")
    if not 0.0 <= damping < 1.0:
        raise DomainError(f"damping must lie in [0, 1), got {damping}")
    ids, src, dst, w = _edge_arrays(graph)
    n = len(ids)
    out_strength = np.zeros(n)
    np.add.at(out_strength, src, w)
    dangling = out_strength == 0.0
    safe = np.where(dangling, 1.0, out_strength)
    frac = w / safe[src]
    x = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        nxt = np.zeros(n)
        np.add.at(nxt, dst, frac * x[src])
        nxt += x[dangling].sum() / n
        nxt = damping * nxt + (1.0 - damping) / n
        err = float(np.abs(nxt - x).sum())
        x = nxt
        if err <= tol:
            x = x / x.sum()
            return ScoreMap({v: float(x[i]) for i, v in enumerate(ids)},
                            Measure.PAGERANK, normalized=True)
    raise ConvergenceError(
        f"pagerank did not converge in {max_iter} iterations", residual=err)


def clustering_coefficient(graph: Graph) -> tuple[ScoreMap, float]:
    """Local clustering on the undirected simple projection (parallel edges
    collapsed, self-loops dropped); returns (per-node scores, average)."""
    nbrs = _simple_neighbors(graph)
    scores = {}
    for v in graph.node_ids():
        nv = nbrs[v]
        d = len(nv)
        if d < 2:
            scores[v] = 0.0
            continue
        closed = sum(len(nv & nbrs[u]) for u in nv) // 2
        scores[v] = 2.0 * closed / (d * (d - 1))
    avg = sum(scores.values()) / len(scores) if scores else 0.0
    return ScoreMap(scores, Measure.CLUSTERING, normalized=True), avg


def shortest_path(graph: Graph, src: int, dst: int) -> PathResult:
    """Minimal-weight path; among equal-length paths the lexicographically
    smallest node sequence is returned."""
    graph._require(src)
    graph._require(dst)
    csr = _kernels.build_connection_csr(graph)
    s, t = csr.pos[src], csr.pos[dst]
    if s == t:
        return PathResult(src, dst, 0.0, [src])
    d_fwd = _sssp(csr, s, reverse=False)
    total = d_fwd[t]
    if total == math.inf:
        raise NoPathError(f"no path from {src} to {dst}")
    d_bwd = _sssp(csr, t, reverse=True)
    # greedy walk: smallest admissible successor at every step
    adj = _adjacency_lists(csr, reverse=False)
    path = [s]
    u = s
    while u != t:
        best = None
        for v, w in adj[u]:
            if (abs(d_fwd[u] + w - d_fwd[v]) <= _tol(d_fwd[v])
                    and abs(d_fwd[v] + d_bwd[v] - total) <= _tol(total)):
                if best is None or v < best:
                    best = v
        assert best is not None, "inconsistent distances during path walk"
        path.append(best)
        u = best
    node_path = [csr.ids[i] for i in path]
    return PathResult(src, dst, float(total), node_path)


def diameter_path(graph: Graph, largest_component: bool = False) -> PathResult:
    """A path realizing the largest finite pairwise distance; ties broken by
    the smallest (src, dst) id pair. Disconnected graphs require
    ``largest_component``."""
    if graph.node_count == 0:
        raise DomainError("diameter undefined on the empty graph")
    comps = graph.connected_components()
    if len(comps) > 1:
        if not largest_component:
            raise DomainError(
                f"graph has {len(comps)} components; pass largest_component=True")
        work = graph.induced_subgraph(comps[0])
    else:
        work = graph
    csr = _kernels.build_connection_csr(work)
    best = (-1.0, None, None)
    for i in range(csr.n):
        dist = _sssp(csr, i, reverse=False)
        for j, d in enumerate(dist):
            if j == i or d == math.inf:
                continue
            pair = (csr.ids[i], csr.ids[j])
            if d > best[0] + _tol(d) or (abs(d - best[0]) <= _tol(d)
                                         and pair < (best[1], best[2])):
                best = (d, pair[0], pair[1])
    if best[1] is None:
        v = work.node_ids()[0]
        return PathResult(v, v, 0.0, [v])
    return shortest_path(work, best[1], best[2])


def top_k(scores: ScoreMap, k: int) -> list[tuple[int, float]]:
    """Descending by score, ties by ascending node id; k > n returns all."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    ranked = sorted(scores.scores.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:k]


# -- shared helpers ---------------------------------------------------------

def _tol(scale: float) -> float:
    return _EPS * (scale if scale > 1.0 else 1.0)


def _simple_neighbors(graph: Graph) -> dict[int, set[int]]:
    """Undirected simple-projection neighbor sets, self excluded."""
    nbrs = {v: set() for v in graph.node_ids()}
    for e in graph.edges():
        if e.src != e.dst:
            nbrs[e.src].add(e.dst)
            nbrs[e.dst].add(e.src)
    return nbrs


def _edge_arrays(graph: Graph):
    """Directed (src, dst, weight) arrays matching adjacency-matrix semantics;
    undirected edges contribute both directions, self-loops once."""
    ids = graph.node_ids()
    pos = {v: i for i, v in enumerate(ids)}
    src, dst, w = [], [], []
    for e in graph.edges():
        src.append(pos[e.src])
        dst.append(pos[e.dst])
        w.append(e.weight)
        if not graph.directed and e.src != e.dst:
            src.append(pos[e.dst])
            dst.append(pos[e.src])
            w.append(e.weight)
    return (ids, np.asarray(src, dtype=np.intp), np.asarray(dst, dtype=np.intp),
            np.asarray(w, dtype=np.float64))


def _adjacency_lists(csr, reverse: bool):
    indptr = csr.rindptr if reverse else csr.indptr
    indices = csr.rindices if reverse else csr.indices
    weights = csr.rweights if reverse else csr.weights
    adj = []
    for i in range(csr.n):
        adj.append([(int(indices[p]), float(weights[p]))
                    for p in range(indptr[i], indptr[i + 1])])
    return adj


def _sssp(csr, source: int, reverse: bool) -> list[float]:
    """Single-source distances over the collapsed connection graph."""
    n = csr.n
    adj = _adjacency_lists(csr, reverse)
    dist = [math.inf] * n
    if csr.uniform:
        base = None
        for row in adj:
            if row:
                base = row[0][1]
                break
        if base is None:
            base = 1.0
        dist[source] = 0.0
        queue = [source]
        head = 0
        hops = [0] * n
        visited = [False] * n
        visited[source] = True
        while head < len(queue):
            v = queue[head]
            head += 1
            for w, _ in adj[v]:
                if not visited[w]:
                    visited[w] = True
                    hops[w] = hops[v] + 1
                    dist[w] = hops[w] * base
                    queue.append(w)
        return dist
    seen = [False] * n
    heap = [(0.0, source)]
    dist[source] = 0.0
    while heap:
        d, v = heappop(heap)
        if seen[v]:
            continue
        seen[v] = True
        dist[v] = d
        for w, wt in adj[v]:
            if not seen[w] and d + wt < dist[w] - _tol(d + wt):
                dist[w] = d + wt
                heappush(heap, (d + wt, w))
    return dist
