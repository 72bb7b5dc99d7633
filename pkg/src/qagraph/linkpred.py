"""Similarity-based link prediction (Jaccard, Adamic-Adar).

Scores are computed on the undirected simple projection: parallel edges
collapse, self-loops are dropped, direction is ignored.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from .centrality import _simple_neighbors
from .errors import DomainError
from .graph import Graph


class LinkMetric(Enum):
    JACCARD = "Jaccard"
    ADAMIC_ADAR = "AdamicAdar"


@dataclass(frozen=True)
class CandidateScore:
    u: int
    v: int
    score: float
    metric: LinkMetric


def _pair_score(nbrs, u, v, metric) -> float:
    common = nbrs[u] & nbrs[v]
    if metric is LinkMetric.JACCARD:
        union = nbrs[u] | nbrs[v]
        return len(common) / len(union) if union else 0.0
    score = 0.0
    for z in common:
        deg = len(nbrs[z])
        if deg < 2:
            # only reachable through self-loop corner cases (e.g. u == v)
            warnings.warn(
                f"common neighbor {z} has degree {deg}; skipped in Adamic-Adar",
                stacklevel=3)
            continue
        score += 1.0 / math.log(deg)
    return score


def jaccard(graph: Graph, u: int, v: int) -> float:
    """|N(u) & N(v)| / |N(u) | N(v)|; 0 when both neighborhoods are empty."""
    graph._require(u)
    graph._require(v)
    return _pair_score(_simple_neighbors(graph), u, v, LinkMetric.JACCARD)


def adamic_adar(graph: Graph, u: int, v: int) -> float:
    """Sum of 1/ln(deg(z)) over common neighbors z of u and v."""
    graph._require(u)
    graph._require(v)
    return _pair_score(_simple_neighbors(graph), u, v, LinkMetric.ADAMIC_ADAR)


def top_candidates(graph: Graph, u: int, k: int,
                   metric: LinkMetric = LinkMetric.JACCARD) -> list[CandidateScore]:
    """Rank non-neighbor nodes at distance 2 from u (both metrics vanish
    beyond that); descending score, ties by ascending partner id."""
    graph._require(u)
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    nbrs = _simple_neighbors(graph)
    candidates = set()
    for z in nbrs[u]:
        candidates |= nbrs[z]
    candidates -= nbrs[u]
    candidates.discard(u)
    scored = [(_pair_score(nbrs, u, w, metric), w) for w in sorted(candidates)]
    scored.sort(key=lambda sw: (-sw[0], sw[1]))
    return [CandidateScore(min(u, w), max(u, w), s, metric) for s, w in scored[:k]]
