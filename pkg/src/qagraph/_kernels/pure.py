"""Pure-Python betweenness kernels, line-for-line mirror of the compiled ones.

Both engines accumulate shortest-path dependencies over every source on a
CSR adjacency (Brandes). Selected at import time by the package when the
compiled extension is missing or QAGRAPH_PURE=1 is set.
"""

from heapq import heappop, heappush

_EPS = 1e-12


def betweenness_bfs(indptr, indices, eids, rindptr, rindices, reids,
                    node_out, edge_out):
    """Unweighted dependency accumulation; writes raw sums into the outputs."""
    n = len(indptr) - 1
    indptr = list(indptr)
    indices = list(indices)
    rindptr = list(rindptr)
    rindices = list(rindices)
    reids = list(reids)
    node_acc = [0.0] * n
    edge_acc = [0.0] * len(edge_out)
    dist = [0] * n
    sigma = [0.0] * n
    delta = [0.0] * n
    order = [0] * n
    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            v = order[head]
            head += 1
            dv1 = dist[v] + 1
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if dist[w] < 0:
                    dist[w] = dv1
                    order[tail] = w
                    tail += 1
                if dist[w] == dv1:
                    sigma[w] += sigma[v]
        for qi in range(tail - 1, -1, -1):
            v = order[qi]
            coeff = (1.0 + delta[v]) / sigma[v]
            dvm1 = dist[v] - 1
            for p in range(rindptr[v], rindptr[v + 1]):
                u = rindices[p]
                if dist[u] == dvm1:
                    c = sigma[u] * coeff
                    delta[u] += c
                    edge_acc[reids[p]] += c
            if v != s:
                node_acc[v] += delta[v]
    for i in range(n):
        node_out[i] = node_acc[i]
    for i in range(len(edge_acc)):
        edge_out[i] = edge_acc[i]


def betweenness_dijkstra(indptr, indices, weights, eids,
                         rindptr, rindices, rweights, reids,
                         node_out, edge_out):
    """Weighted (positive weights) dependency accumulation."""
    n = len(indptr) - 1
    indptr = list(indptr)
    indices = list(indices)
    weights = list(weights)
    rindptr = list(rindptr)
    rindices = list(rindices)
    rweights = list(rweights)
    reids = list(reids)
    node_acc = [0.0] * n
    edge_acc = [0.0] * len(edge_out)
    inf = float("inf")
    for s in range(n):
        dist = [inf] * n
        seen = [inf] * n
        sigma = [0.0] * n
        delta = [0.0] * n
        settled = [False] * n
        order = []
        seen[s] = 0.0
        sigma[s] = 1.0
        heap = [(0.0, s)]
        while heap:
            d, v = heappop(heap)
            if settled[v]:
                continue
            settled[v] = True
            dist[v] = d
            order.append(v)
            for p in range(indptr[v], indptr[v + 1]):
                w = indices[p]
                if settled[w]:
                    continue
                nd = d + weights[p]
                eps = _EPS * (nd if nd > 1.0 else 1.0)
                if nd < seen[w] - eps:
                    seen[w] = nd
                    sigma[w] = sigma[v]
                    heappush(heap, (nd, w))
                elif abs(nd - seen[w]) <= eps:
                    sigma[w] += sigma[v]
        for v in reversed(order):
            coeff = (1.0 + delta[v]) / sigma[v]
            dv = dist[v]
            eps = _EPS * (dv if dv > 1.0 else 1.0)
            for p in range(rindptr[v], rindptr[v + 1]):
                u = rindices[p]
                du = dist[u]
                if du < dv and abs(du + rweights[p] - dv) <= eps:
                    c = sigma[u] * coeff
                    delta[u] += c
                    edge_acc[reids[p]] += c
            if v != s:
                node_acc[v] += delta[v]
    for i in range(n):
        node_out[i] = node_acc[i]
    for i in range(len(edge_acc)):
        edge_out[i] = edge_acc[i]
