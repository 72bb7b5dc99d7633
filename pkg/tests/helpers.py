"""Graph builders shared across the test modules."""

import random

from qagraph import Graph, NodeKind


def build(edges, nodes=(), directed=False):
    """Graph from (u, v) or (u, v, weight) tuples; extra isolated nodes allowed."""
    g = Graph(directed=directed)
    ids = set(nodes)
    for e in edges:
        ids.add(e[0])
        ids.add(e[1])
    for v in sorted(ids):
        g.add_node(v, NodeKind.GENERIC)
    for e in edges:
        weight = e[2] if len(e) > 2 else 1.0
        g.add_edge(e[0], e[1], weight=weight)
    return g


def path_graph(n, directed=False):
    return build([(i, i + 1) for i in range(n - 1)], nodes=range(n), directed=directed)


def cycle_graph(n, directed=False):
    return build([(i, (i + 1) % n) for i in range(n)], directed=directed)


def star_graph(leaves):
    """Center 0 with the given number of leaves 1..leaves."""
    return build([(0, i) for i in range(1, leaves + 1)])


def complete_graph(n):
    return build([(i, j) for i in range(n) for j in range(i + 1, n)])


def barbell_graph():
    """Two triangles {0,1,2} and {3,4,5} bridged 2-3."""
    return build([(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])


def gnm_graph(n, m, seed, directed=False, weight_pool=None):
    """Seeded G(n, m) without parallel edges or self-loops; m capped at the
    maximum simple-graph edge count."""
    rng = random.Random(seed)
    m = min(m, n * (n - 1) if directed else n * (n - 1) // 2)
    chosen = set()
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (u, v) if directed else (min(u, v), max(u, v))
        chosen.add(key)
    edges = []
    for u, v in sorted(chosen):
        w = rng.choice(weight_pool) if weight_pool else 1.0
        edges.append((u, v, w))
    return build(edges, nodes=range(n), directed=directed)


def gnp_graph(n, p, seed, weight_pool=None):
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                w = rng.choice(weight_pool) if weight_pool else 1.0
                edges.append((u, v, w))
    return build(edges, nodes=range(n))


def connected_gnp_graph(n, p, seed, weight_pool=None, max_tries=200):
    for attempt in range(max_tries):
        g = gnp_graph(n, p, seed * 1000 + attempt, weight_pool=weight_pool)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample after {max_tries} tries")


def shuffled_path_graph(n, seed):
    """Path on n nodes with randomly relabeled ids and shuffled insertion order.

    Returns (graph, path_order) where path_order lists the relabeled ids along
    the path.
    """
    rng = random.Random(seed)
    labels = list(range(10, 10 + 3 * n, 3))
    rng.shuffle(labels)
    edges = [(labels[i], labels[i + 1]) for i in range(n - 1)]
    rng.shuffle(edges)
    return build(edges), labels
