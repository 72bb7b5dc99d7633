"""Betweenness kernel dispatch: compiled extension when available, pure fallback.

Set ``QAGRAPH_PURE=1`` to force the fallback (the benchmark uses this to
compare engines). Path semantics here treat parallel edges between a node
pair as one connection at the minimum weight, and self-loops are ignored
(they never lie on a shortest path).
"""

import os
from dataclasses import dataclass

import numpy as np

if os.environ.get("QAGRAPH_PURE"):
    from . import pure as _impl

    COMPILED = False
else:
    try:
        from . import _cext as _impl

        COMPILED = True
    except ImportError:
        from . import pure as _impl

        COMPILED = False

ENGINE = "compiled" if COMPILED else "pure"


@dataclass
class ConnectionCsr:
    """Collapsed simple-projection adjacency of a graph in CSR form.

    ``pairs[k]`` names connection k; for undirected graphs both CSR rows of a
    connection share one eid, so accumulated edge scores land in one slot.
    """

    ids: list
    pos: dict
    pairs: list
    indptr: np.ndarray
    indices: np.ndarray
    weights: np.ndarray
    eids: np.ndarray
    rindptr: np.ndarray
    rindices: np.ndarray
    rweights: np.ndarray
    reids: np.ndarray
    uniform: bool

    @property
    def n(self):
        return len(self.ids)


def build_connection_csr(graph) -> ConnectionCsr:
    ids = graph.node_ids()
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    conn: dict[tuple[int, int], float] = {}
    for e in graph.edges():
        if e.src == e.dst:
            continue
        a, b = pos[e.src], pos[e.dst]
        if not graph.directed and a > b:
            a, b = b, a
        key = (a, b)
        w = conn.get(key)
        if w is None or e.weight < w:
            conn[key] = e.weight
    pairs = sorted(conn)
    eid_of = {pair: k for k, pair in enumerate(pairs)}

    fwd: list[list[tuple[int, float, int]]] = [[] for _ in range(n)]
    rev: list[list[tuple[int, float, int]]] = [[] for _ in range(n)]
    for pair in pairs:
        a, b = pair
        w = conn[pair]
        k = eid_of[pair]
        fwd[a].append((b, w, k))
        if graph.directed:
            rev[b].append((a, w, k))
        else:
            fwd[b].append((a, w, k))
    if not graph.directed:
        rev = fwd

    def _pack(rows):
        indptr = np.zeros(n + 1, dtype=np.int32)
        total = sum(len(r) for r in rows)
        indices = np.zeros(total, dtype=np.int32)
        weights = np.zeros(total, dtype=np.float64)
        eids = np.zeros(total, dtype=np.int32)
        at = 0
        for i in range(n):
            for j, w, k in sorted(rows[i]):
                indices[at] = j
                weights[at] = w
                eids[at] = k
                at += 1
            indptr[i + 1] = at
        return indptr, indices, weights, eids

    indptr, indices, weights, eids = _pack(fwd)
    if rev is fwd:
        rindptr, rindices, rweights, reids = indptr, indices, weights, eids
    else:
        rindptr, rindices, rweights, reids = _pack(rev)
    distinct = {conn[p] for p in pairs}
    return ConnectionCsr(ids, pos, [(ids[a], ids[b]) for a, b in pairs],
                         indptr, indices, weights, eids,
                         rindptr, rindices, rweights, reids,
                         uniform=len(distinct) <= 1)


def _run(csr: ConnectionCsr):
    node_out = np.zeros(csr.n, dtype=np.float64)
    edge_out = np.zeros(len(csr.pairs), dtype=np.float64)
    if csr.n == 0:
        return node_out, edge_out
    if csr.uniform:
        _impl.betweenness_bfs(csr.indptr, csr.indices, csr.eids,
                              csr.rindptr, csr.rindices, csr.reids,
                              node_out, edge_out)
    else:
        _impl.betweenness_dijkstra(csr.indptr, csr.indices, csr.weights, csr.eids,
                                   csr.rindptr, csr.rindices, csr.rweights, csr.reids,
                                   node_out, edge_out)
    return node_out, edge_out


def node_betweenness(graph) -> dict[int, float]:
    """Raw (unnormalized) betweenness sums; undirected pairs counted once."""
    csr = build_connection_csr(graph)
    node_out, _ = _run(csr)
    if not graph.directed:
        node_out *= 0.5
    return {v: float(node_out[i]) for i, v in enumerate(csr.ids)}


def edge_betweenness(graph) -> dict[tuple[int, int], float]:
    """Raw betweenness per collapsed connection, keyed by node-id pair."""
    csr = build_connection_csr(graph)
    _, edge_out = _run(csr)
    if not graph.directed:
        edge_out *= 0.5
    return {pair: float(edge_out[k]) for k, pair in enumerate(csr.pairs)}
