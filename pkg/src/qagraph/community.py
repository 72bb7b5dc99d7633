"""Community detection: Louvain, Girvan-Newman, label propagation, modularity.

All three detectors operate on undirected weighted graphs; directed input is
symmetrized first (antiparallel weights summed). Modularity follows the
weighted Newman form Q = sum_c (w_in_c/S - (d_c/S)^2) with d taken as
adjacency row sums and S their total, so self-loop weights count once.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from . import _kernels
from .errors import DomainError
from .graph import Graph

_GAIN_EPS = 1e-12


class CommunityMethod(Enum):
    LOUVAIN = "Louvain"
    GIRVAN_NEWMAN = "GirvanNewman"
    LPA = "LPA"
    EXTERNAL = "External"


@dataclass
class Partition:
    assignment: dict[int, int]
    modularity: float
    method: CommunityMethod
    converged: bool = True


@dataclass
class GNStep:
    removed_edge: tuple[int, int]
    partition: Partition
    modularity: float


@dataclass
class Dendrogram:
    steps: list[GNStep] = field(default_factory=list)

    def best_partition(self) -> Partition:
        if not self.steps:
            raise DomainError("empty dendrogram has no partition")
        return max(self.steps, key=lambda s: s.modularity).partition


def canonicalize(partition: Partition) -> Partition:
    """Relabel communities 0..k-1 in order of first appearance by ascending id."""
    return Partition(_canonical_labels(partition.assignment), partition.modularity,
                     partition.method, partition.converged)


def _canonical_labels(assignment: dict[int, int]) -> dict[int, int]:
    relabel: dict[int, int] = {}
    out = {}
    for v in sorted(assignment):
        label = assignment[v]
        if label not in relabel:
            relabel[label] = len(relabel)
        out[v] = relabel[label]
    return out


def modularity(graph: Graph, partition) -> float:
    """Newman weighted modularity of a node->community mapping."""
    assignment = partition.assignment if isinstance(partition, Partition) else dict(partition)
    g = graph.to_undirected() if graph.directed else graph
    if g.edge_count == 0:
        raise DomainError("modularity undefined: graph has no edges")
    for v in g.node_ids():
        if v not in assignment:
            raise DomainError(f"partition does not cover node {v}")
    strength: dict[int, float] = {v: 0.0 for v in g.node_ids()}
    w_in: dict[int, float] = {}
    total = 0.0
    for e in g.edges():
        cu, cv = assignment[e.src], assignment[e.dst]
        if e.src == e.dst:
            total += e.weight
            strength[e.src] += e.weight
            w_in[cu] = w_in.get(cu, 0.0) + e.weight
        else:
            total += 2.0 * e.weight
            strength[e.src] += e.weight
            strength[e.dst] += e.weight
            if cu == cv:
                w_in[cu] = w_in.get(cu, 0.0) + 2.0 * e.weight
    d_c: dict[int, float] = {}
    for v, s in strength.items():
        c = assignment[v]
        d_c[c] = d_c.get(c, 0.0) + s
    q = 0.0
    for c, d in d_c.items():
        q += w_in.get(c, 0.0) / total - (d / total) ** 2
    return q


# -- Louvain ----------------------------------------------------------------

def louvain(graph: Graph, resolution: float = 1.0, seed: int = 0) -> Partition:
    """Two-phase Louvain: seeded local moves until no gain, then aggregation,
    repeated to a fixpoint. Returned modularity is the standard (resolution 1)
    value of the final partition."""
    g = graph.to_undirected() if graph.directed else graph
    if g.edge_count == 0:
        raise DomainError("louvain requires at least one edge")
    ids = g.node_ids()
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    adj: list[dict[int, float]] = [{} for _ in range(n)]
    loops = [0.0] * n
    for e in g.edges():
        a, b = pos[e.src], pos[e.dst]
        if a == b:
            loops[a] += e.weight
        else:
            adj[a][b] = adj[a].get(b, 0.0) + e.weight
            adj[b][a] = adj[b].get(a, 0.0) + e.weight
    strength = [sum(adj[i].values()) + loops[i] for i in range(n)]
    total = sum(strength)
    rng = random.Random(seed)

    membership = list(range(n))
    while True:
        comm, moved = _louvain_level(adj, strength, total, resolution, rng)
        if not moved:
            break
        labels = _dense_labels(comm)
        membership = [labels[comm[membership[i]]] for i in range(len(membership))]
        adj, loops, strength = _aggregate(adj, loops, comm, labels)
        if len(adj) == 1:
            break

    assignment = {ids[i]: membership[i] for i in range(n)}
    assignment = _canonical_labels(assignment)
    part = Partition(assignment, 0.0, CommunityMethod.LOUVAIN)
    part.modularity = modularity(g, assignment)
    return part


def _louvain_level(adj, strength, total, resolution, rng):
    n = len(adj)
    comm = list(range(n))
    tot = strength[:]
    order = list(range(n))
    rng.shuffle(order)
    moved_any = False
    while True:
        moves = 0
        for v in order:
            cv = comm[v]
            links: dict[int, float] = {}
            for w, wt in adj[v].items():
                c = comm[w]
                links[c] = links.get(c, 0.0) + wt
            tot[cv] -= strength[v]
            best_c = cv
            best_gain = links.get(cv, 0.0) - resolution * strength[v] * tot[cv] / total
            for c in sorted(links):
                if c == cv:
                    continue
                gain = links[c] - resolution * strength[v] * tot[c] / total
                if gain > best_gain + _GAIN_EPS:
                    best_gain = gain
                    best_c = c
            tot[best_c] += strength[v]
            if best_c != cv:
                comm[v] = best_c
                moves += 1
        if moves == 0:
            break
        moved_any = True
    return comm, moved_any


def _dense_labels(comm):
    labels: dict[int, int] = {}
    for i in range(len(comm)):
        c = comm[i]
        if c not in labels:
            labels[c] = len(labels)
    return labels


def _aggregate(adj, loops, comm, labels):
    k = len(labels)
    new_adj: list[dict[int, float]] = [{} for _ in range(k)]
    new_loops = [0.0] * k
    for i in range(len(adj)):
        ci = labels[comm[i]]
        new_loops[ci] += loops[i]
        for j, wt in adj[i].items():
            if j <= i:
                continue
            cj = labels[comm[j]]
            if ci == cj:
                new_loops[ci] += 2.0 * wt
            else:
                new_adj[ci][cj] = new_adj[ci].get(cj, 0.0) + wt
                new_adj[cj][ci] = new_adj[cj].get(ci, 0.0) + wt
    new_strength = [sum(new_adj[c].values()) + new_loops[c] for c in range(k)]
    return new_adj, new_loops, new_strength


# -- Girvan-Newman ----------------------------------------------------------

def girvan_newman(graph: Graph, target_communities: int | None = None) -> Dendrogram:
    """Divisive splitting by repeated removal of the max-betweenness connection
    (exact recomputation each step, ties by smallest endpoint pair). Each step
    records the component partition and its modularity on the input graph.
    Self-loops never carry shortest paths and are ignored."""
    g = graph.to_undirected() if graph.directed else graph
    ids = g.node_ids()
    conn: dict[tuple[int, int], float] = {}
    for e in g.edges():
        if e.src == e.dst:
            continue
        key = (min(e.src, e.dst), max(e.src, e.dst))
        w = conn.get(key)
        if w is None or e.weight < w:
            conn[key] = e.weight
    ncomp = _component_count(ids, conn)
    if target_communities is not None and target_communities < ncomp:
        raise DomainError(
            f"target {target_communities} below current component count {ncomp}")
    steps: list[GNStep] = []
    while conn and (target_communities is None or ncomp < target_communities):
        work = Graph(directed=False)
        for v in ids:
            work.add_node(v)
        for (u, v), w in conn.items():
            work.add_edge(u, v, weight=w)
        scores = _kernels.edge_betweenness(work)
        best_pair = None
        best_score = -1.0
        for pair in sorted(scores):
            if scores[pair] > best_score + 1e-9:
                best_score = scores[pair]
                best_pair = pair
        del conn[best_pair]
        assignment = _components_assignment(ids, conn)
        q = modularity(g, assignment)
        ncomp = len(set(assignment.values()))
        part = Partition(assignment, q, CommunityMethod.GIRVAN_NEWMAN)
        steps.append(GNStep(best_pair, part, q))
    return Dendrogram(steps)


def _union_find(ids, conn):
    parent = {v: v for v in ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in conn:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return {v: find(v) for v in ids}


def _component_count(ids, conn):
    roots = _union_find(ids, conn)
    return len(set(roots.values()))


def _components_assignment(ids, conn):
    roots = _union_find(ids, conn)
    return _canonical_labels(roots)


# -- Label propagation --------------------------------------------------------

def label_propagation(graph: Graph, seed: int = 0, max_iter: int = 100) -> Partition:
    """Asynchronous LPA: seeded random node order each sweep; a node keeps its
    label when it is already among the weighted-majority labels, otherwise it
    adopts one of them uniformly at random. Stops on a change-free sweep."""
    g = graph.to_undirected() if graph.directed else graph
    ids = g.node_ids()
    adj: dict[int, dict[int, float]] = {v: {} for v in ids}
    for e in g.edges():
        if e.src == e.dst:
            continue
        adj[e.src][e.dst] = adj[e.src].get(e.dst, 0.0) + e.weight
        adj[e.dst][e.src] = adj[e.dst].get(e.src, 0.0) + e.weight
    labels = {v: i for i, v in enumerate(ids)}
    rng = random.Random(seed)
    converged = False
    for _ in range(max_iter):
        order = list(ids)
        rng.shuffle(order)
        changes = 0
        for v in order:
            tally: dict[int, float] = {}
            for w, wt in adj[v].items():
                lw = labels[w]
                tally[lw] = tally.get(lw, 0.0) + wt
            if not tally:
                continue
            best = max(tally.values())
            winners = [lab for lab, wt in tally.items() if wt == best]
            if labels[v] in winners:
                continue
            labels[v] = rng.choice(sorted(winners))
            changes += 1
        if changes == 0:
            converged = True
            break
    assignment = _canonical_labels(labels)
    q = modularity(g, assignment) if g.edge_count > 0 else 0.0
    return Partition(assignment, q, CommunityMethod.LPA, converged=converged)
