"""Graph matrices, spectral metrics, and the eigenvalue-embedding classifier.

Node index order is ascending node id throughout, fixed for reproducibility.
Dense symmetric eigenproblems go through numpy's LAPACK bindings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedInputError
from .graph import Graph


@dataclass
class SpectralFeatures:
    """Fixed-length graph embedding: descending normalized-Laplacian
    eigenvalues, zero-padded to length k."""

    eigenvalues: np.ndarray
    source_graph_size: int
    k: int


def adjacency_matrix(graph: Graph) -> np.ndarray:
    """A[i, j] = summed weight of edges i->j; mirrored when undirected,
    self-loop weight appears once on the diagonal."""
    ids = graph.node_ids()
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    a = np.zeros((n, n))
    for e in graph.edges():
        i, j = pos[e.src], pos[e.dst]
        a[i, j] += e.weight
        if not graph.directed and i != j:
            a[j, i] += e.weight
    return a


def incidence_matrix(graph: Graph, oriented: bool = True) -> np.ndarray:
    """n x m incidence; edge columns in insertion order. Oriented columns get
    -1 at the source and +1 at the target (self-loops rejected); unoriented
    columns get +1 at both endpoints."""
    ids = graph.node_ids()
    pos = {v: i for i, v in enumerate(ids)}
    edges = graph.edges()
    b = np.zeros((len(ids), len(edges)))
    for j, e in enumerate(edges):
        if e.src == e.dst:
            if oriented:
                raise DomainError(
                    f"self-loop at node {e.src} has no oriented incidence column")
            b[pos[e.src], j] = 2.0
        elif oriented:
            b[pos[e.src], j] = -1.0
            b[pos[e.dst], j] = 1.0
        else:
            b[pos[e.src], j] = 1.0
            b[pos[e.dst], j] = 1.0
    return b


def laplacian(graph: Graph) -> np.ndarray:
    """L = D - A with weighted degrees (adjacency row sums); undirected only."""
    if graph.directed:
        raise UnsupportedInputError("laplacian is not defined for directed graphs")
    a = adjacency_matrix(graph)
    return np.diag(a.sum(axis=1)) - a


def normalized_laplacian(graph: Graph) -> np.ndarray:
    """D^{-1/2} L D^{-1/2} with the 0-degree convention D^{-1/2} = 0, so each
    isolated node contributes eigenvalue 0. Eigenvalues lie in [0, 2]."""
    if graph.directed:
        raise UnsupportedInputError(
            "normalized laplacian is not defined for directed graphs")
    a = adjacency_matrix(graph)
    deg = a.sum(axis=1)
    inv_sqrt = np.where(deg > 0, 1.0 / np.sqrt(np.where(deg > 0, deg, 1.0)), 0.0)
    lap = np.diag(deg) - a
    out = lap * inv_sqrt[:, None] * inv_sqrt[None, :]
    return (out + out.T) / 2.0


def _transition_matrix(graph: Graph, teleport: float) -> np.ndarray:
    a = adjacency_matrix(graph)
    n = a.shape[0]
    out = a.sum(axis=1)
    # rows without out-weight fall back to the uniform walk (only reachable
    # for teleport > 0, or the trivial single-node graph)
    p = np.where(out[:, None] > 0, a / np.where(out > 0, out, 1.0)[:, None], 1.0 / n)
    if teleport == 0.0:
        if not graph.is_connected(strong=True):
            raise DomainError(
                "graph is not strongly connected; pass teleport > 0 to force irreducibility")
    else:
        p = (1.0 - teleport) * p + teleport / n
    return p


def _stationary(p: np.ndarray) -> np.ndarray:
    n = p.shape[0]
    system = p.T - np.eye(n)
    system[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    pi = np.linalg.solve(system, rhs)
    return pi


def directed_laplacian(graph: Graph, teleport: float = 0.0) -> np.ndarray:
    """Random-walk symmetrization I - (F^{1/2} P F^{-1/2} + F^{-1/2} P^T F^{1/2})/2
    with F the stationary distribution; symmetric PSD with a zero eigenvalue.
    Parallel edges are summed first."""
    _check_teleport(graph, teleport)
    p = _transition_matrix(graph, teleport)
    pi = _stationary(p)
    sqrt_pi = np.sqrt(pi)
    m = (sqrt_pi[:, None] * p / sqrt_pi[None, :]
         + (1.0 / sqrt_pi)[:, None] * p.T * sqrt_pi[None, :]) / 2.0
    out = np.eye(p.shape[0]) - m
    return (out + out.T) / 2.0


def directed_combinatorial_laplacian(graph: Graph, teleport: float = 0.0) -> np.ndarray:
    """F - (F P + P^T F)/2 with F = diag(stationary distribution); symmetric
    PSD with the all-ones null vector."""
    _check_teleport(graph, teleport)
    p = _transition_matrix(graph, teleport)
    pi = _stationary(p)
    m = (pi[:, None] * p + p.T * pi[None, :]) / 2.0
    out = np.diag(pi) - m
    return (out + out.T) / 2.0


def _check_teleport(graph: Graph, teleport: float) -> None:
    if not 0.0 <= teleport < 1.0:
        raise DomainError(f"teleport must lie in [0, 1), got {teleport}")
    if graph.node_count == 0:
        raise DomainError("laplacian undefined on the empty graph")


def bethe_hessian(graph: Graph, r: float | None = None) -> np.ndarray:
    """H(r) = (r^2 - 1) I - r A + D; default r is sqrt(average weighted degree).
    Parallel edges are summed first. H(1) equals the Laplacian."""
    if graph.directed:
        raise UnsupportedInputError("bethe hessian is not defined for directed graphs")
    a = adjacency_matrix(graph)
    deg = a.sum(axis=1)
    if r is None:
        r = math.sqrt(deg.mean()) if deg.size else 0.0
    n = a.shape[0]
    return (r * r - 1.0) * np.eye(n) - r * a + np.diag(deg)


def algebraic_connectivity(graph: Graph) -> float:
    """Second-smallest Laplacian eigenvalue; 0 iff the graph is disconnected."""
    if graph.node_count < 2:
        raise DomainError("algebraic connectivity needs at least two nodes")
    eigenvalues = np.linalg.eigvalsh(laplacian(graph))
    return float(eigenvalues[1])


def fiedler_vector(graph: Graph) -> dict[int, float]:
    """Unit eigenvector for the second-smallest Laplacian eigenvalue; sign
    fixed so the first nonzero entry (by ascending id) is positive."""
    if graph.node_count < 2:
        raise DomainError("fiedler vector needs at least two nodes")
    if not graph.is_connected():
        raise DomainError(
            "graph is disconnected; run per-component analysis instead")
    _, vectors = np.linalg.eigh(laplacian(graph))
    vec = vectors[:, 1]
    for entry in vec:
        if abs(entry) > 1e-12:
            if entry < 0:
                vec = -vec
            break
    ids = graph.node_ids()
    return {v: float(vec[i]) for i, v in enumerate(ids)}


def spectral_ordering(graph: Graph) -> list[int]:
    """Nodes sorted ascending by Fiedler entry, ties by ascending id."""
    fiedler = fiedler_vector(graph)
    return sorted(fiedler, key=lambda v: (fiedler[v], v))


def graph_embedding(graph: Graph, k: int) -> SpectralFeatures:
    """k largest normalized-Laplacian eigenvalues, descending, zero-padded."""
    if k < 1:
        raise DomainError(f"embedding length must be >= 1, got {k}")
    n = graph.node_count
    if n == 0:
        values = np.zeros(k)
    else:
        eigenvalues = np.linalg.eigvalsh(normalized_laplacian(graph))
        top = eigenvalues[::-1][:k]
        values = np.zeros(k)
        values[:top.size] = top
    return SpectralFeatures(values, n, k)


def classify(train: list[tuple[Graph, str]], test: list[Graph], k: int) -> list[str]:
    """1-nearest-neighbor on Euclidean distance between spectral embeddings;
    distance ties resolve to the earliest training graph."""
    if not train:
        raise DomainError("classification requires a nonempty training set")
    anchors = [(graph_embedding(g, k).eigenvalues, label) for g, label in train]
    predictions = []
    for g in test:
        features = graph_embedding(g, k).eigenvalues
        best_label = None
        best_dist = math.inf
        for features_t, label in anchors:
            dist = float(np.linalg.norm(features - features_t))
            if dist < best_dist:
                best_dist = dist
                best_label = label
        predictions.append(best_label)
    return predictions


# -- matrix text formats ------------------------------------------------------

def matrix_to_dense_text(matrix: np.ndarray) -> str:
    """Whitespace-delimited rows, one line per row."""
    lines = [" ".join(_fmt(v) for v in row) for row in matrix]
    return "\n".join(lines) + ("\n" if lines else "")


def matrix_to_coo_text(matrix: np.ndarray) -> str:
    """`i j value` lines (0-based), row-major over nonzero entries."""
    lines = []
    rows, cols = matrix.shape if matrix.ndim == 2 else (0, 0)
    for i in range(rows):
        for j in range(cols):
            if matrix[i, j] != 0.0:
                lines.append(f"{i} {j} {_fmt(matrix[i, j])}")
    return "\n".join(lines) + ("\n" if lines else "")


def _fmt(value: float) -> str:
    return f"{value:.12g}"
