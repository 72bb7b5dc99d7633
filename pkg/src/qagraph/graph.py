"""In-memory graph model: directed/undirected weighted multigraph with typed nodes.

Adjacency is stored per node with edge multiplicity so neighbor iteration is
O(deg). Graphs are built once (single writer) and then treated as immutable
by every analysis routine; nothing in this package mutates a graph after
construction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    ConflictError,
    DanglingEdgeError,
    DomainError,
    NotFoundError,
)


class NodeKind(Enum):
    USER = "User"
    QUESTION = "Question"
    ANSWER = "Answer"
    TAG = "Tag"
    GENERIC = "Generic"


class EdgeKind(Enum):
    ANSWERED = "Answered"
    ASKED = "Asked"
    TAGGED = "Tagged"
    COOCCURS = "CoOccurs"
    GENERIC = "Generic"


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    kind: EdgeKind = EdgeKind.GENERIC
    weight: float = 1.0


class Graph:
    """Weighted multigraph. Parallel edges allowed; self-loops allowed and flagged.

    For undirected graphs each edge is stored once but appears in the adjacency
    of both endpoints, so neighbor queries are symmetric.
    """

    def __init__(self, directed: bool = False):
        self.directed = directed
        self._kinds: dict[int, NodeKind] = {}
        self._attrs: dict[int, dict[str, str]] = {}
        self._edges: list[Edge] = []
        # node -> neighbor -> [edge indices]; for undirected graphs _radj is _adj
        self._adj: dict[int, dict[int, list[int]]] = {}
        self._radj: dict[int, dict[int, list[int]]] = {} if directed else self._adj
        self._self_loops = 0

    # -- construction ------------------------------------------------------

    def add_node(self, node: int, kind: NodeKind = NodeKind.GENERIC,
                 attrs: dict[str, str] | None = None) -> "Graph":
        if not isinstance(node, int) or isinstance(node, bool) or node < 0:
            raise DomainError(f"node id must be a nonnegative integer, got {node!r}")
        existing = self._kinds.get(node)
        if existing is not None:
            if existing is not kind:
                raise ConflictError(
                    f"node {node} already present with kind {existing.value}, "
                    f"cannot re-add as {kind.value}")
            if attrs:
                self._attrs.setdefault(node, {}).update(attrs)
            return self
        self._kinds[node] = kind
        if attrs:
            self._attrs[node] = dict(attrs)
        self._adj[node] = {}
        if self.directed:
            self._radj[node] = {}
        return self

    def add_edge(self, src: int, dst: int, kind: EdgeKind = EdgeKind.GENERIC,
                 weight: float = 1.0) -> "Graph":
        for endpoint in (src, dst):
            if endpoint not in self._kinds:
                raise DanglingEdgeError(f"edge ({src}, {dst}) references missing node {endpoint}")
        weight = float(weight)
        if not weight > 0:
            raise DomainError(f"edge weight must be positive, got {weight}")
        idx = len(self._edges)
        self._edges.append(Edge(src, dst, kind, weight))
        self._adj[src].setdefault(dst, []).append(idx)
        if src == dst:
            self._self_loops += 1
            if self.directed:
                self._radj[dst].setdefault(src, []).append(idx)
        else:
            if self.directed:
                self._radj[dst].setdefault(src, []).append(idx)
            else:
                self._adj[dst].setdefault(src, []).append(idx)
        return self

    # -- queries -----------------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._kinds)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def has_self_loops(self) -> bool:
        return self._self_loops > 0

    def node_ids(self) -> list[int]:
        """All node ids, ascending."""
        return sorted(self._kinds)

    def has_node(self, node: int) -> bool:
        return node in self._kinds

    def kind(self, node: int) -> NodeKind:
        self._require(node)
        return self._kinds[node]

    def attrs(self, node: int) -> dict[str, str]:
        self._require(node)
        return dict(self._attrs.get(node, {}))

    def edges(self) -> list[Edge]:
        """Edges in insertion order (undirected edges reported once)."""
        return list(self._edges)

    def neighbors(self, node: int, direction: str = "all") -> set[int]:
        self._require(node)
        if not self.directed:
            return set(self._adj[node])
        if direction == "out":
            return set(self._adj[node])
        if direction == "in":
            return set(self._radj[node])
        if direction == "all":
            return set(self._adj[node]) | set(self._radj[node])
        raise DomainError(f"unknown direction {direction!r}")

    def degree(self, node: int, direction: str = "all") -> int:
        """Edge-endpoint count; parallel edges counted, undirected self-loop counts 2."""
        self._require(node)
        if not self.directed:
            total = 0
            for nbr, idxs in self._adj[node].items():
                total += len(idxs) * (2 if nbr == node else 1)
            return total
        out_deg = sum(len(v) for v in self._adj[node].values())
        in_deg = sum(len(v) for v in self._radj[node].values())
        if direction == "out":
            return out_deg
        if direction == "in":
            return in_deg
        if direction == "all":
            return out_deg + in_deg
        raise DomainError(f"unknown direction {direction!r}")

    def edge_weight_between(self, u: int, v: int, direction: str = "out") -> float:
        """Summed weight of edges u->v ('out'), v->u ('in'), or either ('all')."""
        self._require(u)
        total = 0.0
        if direction in ("out", "all") or not self.directed:
            total += sum(self._edges[i].weight for i in self._adj[u].get(v, ()))
        if self.directed and direction in ("in", "all"):
            total += sum(self._edges[i].weight for i in self._radj[u].get(v, ()))
        return total

    def _require(self, node: int) -> None:
        if node not in self._kinds:
            raise NotFoundError(f"node {node} not in graph")

    # -- derived graphs ----------------------------------------------------

    def copy(self) -> "Graph":
        g = Graph(directed=self.directed)
        for node in self._kinds:
            g.add_node(node, self._kinds[node], self._attrs.get(node))
        for e in self._edges:
            g.add_edge(e.src, e.dst, e.kind, e.weight)
        return g

    def to_undirected(self) -> "Graph":
        """Undirected view. Directed inputs collapse all parallel and antiparallel
        edges between a node pair into one edge with summed weight; undirected
        inputs are returned as an identical copy."""
        if not self.directed:
            return self.copy()
        g = Graph(directed=False)
        for node in self._kinds:
            g.add_node(node, self._kinds[node], self._attrs.get(node))
        merged: dict[tuple[int, int], tuple[float, EdgeKind]] = {}
        order: list[tuple[int, int]] = []
        for e in self._edges:
            key = (e.src, e.dst) if e.src <= e.dst else (e.dst, e.src)
            if key in merged:
                weight, kind = merged[key]
                merged[key] = (weight + e.weight, kind)
            else:
                merged[key] = (e.weight, e.kind)
                order.append(key)
        for key in order:
            weight, kind = merged[key]
            g.add_edge(key[0], key[1], kind, weight)
        return g

    def induced_subgraph(self, nodes) -> "Graph":
        keep = set(nodes)
        for node in keep:
            self._require(node)
        g = Graph(directed=self.directed)
        for node in sorted(keep):
            g.add_node(node, self._kinds[node], self._attrs.get(node))
        for e in self._edges:
            if e.src in keep and e.dst in keep:
                g.add_edge(e.src, e.dst, e.kind, e.weight)
        return g

    # -- connectivity ------------------------------------------------------

    def connected_components(self, strong: bool = False) -> list[set[int]]:
        """Components sorted by size descending, ties by smallest member id.

        Directed graphs use weak connectivity unless ``strong`` is set.
        """
        if strong and self.directed:
            comps = self._strong_components()
        else:
            comps = self._weak_components()
        return sorted(comps, key=lambda c: (-len(c), min(c)))

    def _weak_components(self) -> list[set[int]]:
        seen: set[int] = set()
        comps = []
        for start in self._kinds:
            if start in seen:
                continue
            comp = {start}
            seen.add(start)
            stack = [start]
            while stack:
                v = stack.pop()
                nbrs = set(self._adj[v])
                if self.directed:
                    nbrs |= set(self._radj[v])
                for w in nbrs:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(comp)
        return comps

    def _strong_components(self) -> list[set[int]]:
        # Iterative Tarjan
        index: dict[int, int] = {}
        low: dict[int, int] = {}
        on_stack: set[int] = set()
        stack: list[int] = []
        comps: list[set[int]] = []
        counter = 0
        for root in self._kinds:
            if root in index:
                continue
            work = [(root, iter(self._adj[root]))]
            index[root] = low[root] = counter
            counter += 1
            stack.append(root)
            on_stack.add(root)
            while work:
                v, it = work[-1]
                advanced = False
                for w in it:
                    if w not in index:
                        index[w] = low[w] = counter
                        counter += 1
                        stack.append(w)
                        on_stack.add(w)
                        work.append((w, iter(self._adj[w])))
                        advanced = True
                        break
                    if w in on_stack:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = set()
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.add(w)
                        if w == v:
                            break
                    comps.append(comp)
        return comps

    def is_connected(self, strong: bool = False) -> bool:
        if self.node_count == 0:
            return True
        return len(self.connected_components(strong=strong)) == 1

    # -- comparison --------------------------------------------------------

    def _edge_multiset(self) -> Counter:
        items = []
        for e in self._edges:
            if self.directed:
                key = (e.src, e.dst)
            else:
                key = (min(e.src, e.dst), max(e.src, e.dst))
            items.append((key, e.kind, e.weight))
        return Counter(items)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.directed == other.directed
                and self._kinds == other._kinds
                and {n: a for n, a in self._attrs.items() if a}
                == {n: a for n, a in other._attrs.items() if a}
                and self._edge_multiset() == other._edge_multiset())

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"<Graph {kind} |V|={self.node_count} |E|={self.edge_count}>"


def uniform_weight(graph: Graph) -> float | None:
    """The common edge weight if every edge carries the same one, else None."""
    weights = {e.weight for e in graph.edges()}
    if not weights:
        return 1.0
    if len(weights) == 1:
        return weights.pop()
    return None
