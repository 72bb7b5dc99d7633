# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled betweenness kernels (Brandes dependency accumulation on CSR arrays).

Must stay semantically identical to pure.py; the test suite checks parity.
"""

from libc.stdlib cimport free, malloc

cdef double _EPS = 1e-12


cdef inline bint _less(double d1, int v1, double d2, int v2) noexcept nogil:
    return d1 < d2 or (d1 == d2 and v1 < v2)


cdef inline void _heap_push(double* hd, int* hv, int* size, double d, int v) noexcept nogil:
    cdef int i = size[0]
    cdef int parent
    cdef double td
    cdef int tv
    hd[i] = d
    hv[i] = v
    size[0] = i + 1
    while i > 0:
        parent = (i - 1) >> 1
        if _less(hd[i], hv[i], hd[parent], hv[parent]):
            td = hd[i]; hd[i] = hd[parent]; hd[parent] = td
            tv = hv[i]; hv[i] = hv[parent]; hv[parent] = tv
            i = parent
        else:
            break


cdef inline void _heap_pop(double* hd, int* hv, int* size, double* out_d, int* out_v) noexcept nogil:
    cdef int i = 0
    cdef int child, last
    cdef double td
    cdef int tv
    out_d[0] = hd[0]
    out_v[0] = hv[0]
    last = size[0] - 1
    hd[0] = hd[last]
    hv[0] = hv[last]
    size[0] = last
    while True:
        child = 2 * i + 1
        if child >= last:
            break
        if child + 1 < last and _less(hd[child + 1], hv[child + 1], hd[child], hv[child]):
            child += 1
        if _less(hd[child], hv[child], hd[i], hv[i]):
            td = hd[i]; hd[i] = hd[child]; hd[child] = td
            tv = hv[i]; hv[i] = hv[child]; hv[child] = tv
            i = child
        else:
            break


def betweenness_bfs(int[::1] indptr, int[::1] indices, int[::1] eids,
                    int[::1] rindptr, int[::1] rindices, int[::1] reids,
                    double[::1] node_out, double[::1] edge_out):
    """Unweighted dependency accumulation; writes raw sums into the outputs."""
    cdef int n = indptr.shape[0] - 1
    if n <= 0:
        return
    cdef int* dist = <int*> malloc(n * sizeof(int))
    cdef double* sigma = <double*> malloc(n * sizeof(double))
    cdef double* delta = <double*> malloc(n * sizeof(double))
    cdef int* order = <int*> malloc(n * sizeof(int))
    if dist == NULL or sigma == NULL or delta == NULL or order == NULL:
        free(dist); free(sigma); free(delta); free(order)
        raise MemoryError()
    cdef int s, i, v, w, u, p, head, tail, qi, dv1, dvm1
    cdef double coeff, c
    with nogil:
        for s in range(n):
            for i in range(n):
                dist[i] = -1
                sigma[i] = 0.0
                delta[i] = 0.0
            dist[s] = 0
            sigma[s] = 1.0
            order[0] = s
            head = 0
            tail = 1
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
                        edge_out[reids[p]] += c
                if v != s:
                    node_out[v] += delta[v]
    free(dist); free(sigma); free(delta); free(order)


def betweenness_dijkstra(int[::1] indptr, int[::1] indices, double[::1] weights, int[::1] eids,
                         int[::1] rindptr, int[::1] rindices, double[::1] rweights, int[::1] reids,
                         double[::1] node_out, double[::1] edge_out):
    """Weighted (positive weights) dependency accumulation."""
    cdef int n = indptr.shape[0] - 1
    if n <= 0:
        return
    cdef int m = indices.shape[0]
    cdef int cap = m + n + 2
    cdef double* dist = <double*> malloc(n * sizeof(double))
    cdef double* seen = <double*> malloc(n * sizeof(double))
    cdef double* sigma = <double*> malloc(n * sizeof(double))
    cdef double* delta = <double*> malloc(n * sizeof(double))
    cdef char* settled = <char*> malloc(n * sizeof(char))
    cdef int* order = <int*> malloc(n * sizeof(int))
    cdef double* hd = <double*> malloc(cap * sizeof(double))
    cdef int* hv = <int*> malloc(cap * sizeof(int))
    if (dist == NULL or seen == NULL or sigma == NULL or delta == NULL
            or settled == NULL or order == NULL or hd == NULL or hv == NULL):
        free(dist); free(seen); free(sigma); free(delta)
        free(settled); free(order); free(hd); free(hv)
        raise MemoryError()
    cdef int s, i, v, w, u, p, heap_size, norder, qi
    cdef double d, nd, eps, coeff, c, dv, du, inf
    inf = float("inf")
    with nogil:
        for s in range(n):
            for i in range(n):
                dist[i] = inf
                seen[i] = inf
                sigma[i] = 0.0
                delta[i] = 0.0
                settled[i] = 0
            norder = 0
            seen[s] = 0.0
            sigma[s] = 1.0
            heap_size = 0
            _heap_push(hd, hv, &heap_size, 0.0, s)
            while heap_size > 0:
                _heap_pop(hd, hv, &heap_size, &d, &v)
                if settled[v]:
                    continue
                settled[v] = 1
                dist[v] = d
                order[norder] = v
                norder += 1
                for p in range(indptr[v], indptr[v + 1]):
                    w = indices[p]
                    if settled[w]:
                        continue
                    nd = d + weights[p]
                    eps = _EPS * (nd if nd > 1.0 else 1.0)
                    if nd < seen[w] - eps:
                        seen[w] = nd
                        sigma[w] = sigma[v]
                        _heap_push(hd, hv, &heap_size, nd, w)
                    elif nd - seen[w] <= eps and seen[w] - nd <= eps:
                        sigma[w] += sigma[v]
            for qi in range(norder - 1, -1, -1):
                v = order[qi]
                coeff = (1.0 + delta[v]) / sigma[v]
                dv = dist[v]
                eps = _EPS * (dv if dv > 1.0 else 1.0)
                for p in range(rindptr[v], rindptr[v + 1]):
                    u = rindices[p]
                    du = dist[u]
                    if du < dv and du + rweights[p] - dv <= eps and dv - du - rweights[p] <= eps:
                        c = sigma[u] * coeff
                        delta[u] += c
                        edge_out[reids[p]] += c
                if v != s:
                    node_out[v] += delta[v]
    free(dist); free(seen); free(sigma); free(delta)
    free(settled); free(order); free(hd); free(hv)
