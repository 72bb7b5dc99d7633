"""Subnetwork sampling: snowball, uniform random, stratified.

Every sampler returns an induced subgraph and is a pure function of
(graph, parameters, seed); the generator is Python's Mersenne Twister
(random.Random), so identical seeds reproduce identical samples anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .errors import DomainError
from .graph import Graph


class SampleMethod(Enum):
    SNOWBALL = "snowball"
    RANDOM = "random"
    STRATIFIED = "stratified"


@dataclass
class SampleSpec:
    method: SampleMethod
    seed: int = 0
    parameters: dict = field(default_factory=dict)


def snowball_sample(graph: Graph, seeds, depth: int) -> Graph:
    """Induced subgraph on every node within ``depth`` hops of a seed,
    ignoring edge direction."""
    if depth < 0:
        raise DomainError(f"depth must be nonnegative, got {depth}")
    seed_set = set(seeds)
    for v in seed_set:
        graph._require(v)
    frontier = set(seed_set)
    reached = set(seed_set)
    for _ in range(depth):
        nxt = set()
        for v in frontier:
            nxt |= graph.neighbors(v, "all")
        frontier = nxt - reached
        if not frontier:
            break
        reached |= frontier
    return graph.induced_subgraph(reached)


def random_sample(graph: Graph, n: int, seed: int = 0) -> Graph:
    """Induced subgraph on n nodes drawn uniformly without replacement."""
    if not 0 <= n <= graph.node_count:
        raise DomainError(
            f"sample size {n} outside [0, {graph.node_count}]")
    rng = random.Random(seed)
    chosen = rng.sample(graph.node_ids(), n)
    return graph.induced_subgraph(chosen)


def stratified_sample(graph: Graph, attribute: str,
                      counts: Mapping[str, int | None], seed: int = 0) -> Graph:
    """Per-stratum uniform sampling, then the induced subgraph of the union.

    Strata come from the node kind when ``attribute`` is "kind", otherwise
    from the node attribute map (nodes lacking the attribute belong to no
    stratum). A count of None takes the whole stratum.
    """
    strata: dict[str, list[int]] = {}
    for v in graph.node_ids():
        if attribute == "kind":
            key = graph.kind(v).value
        else:
            key = graph.attrs(v).get(attribute)
            if key is None:
                continue
        strata.setdefault(key, []).append(v)
    rng = random.Random(seed)
    chosen: set[int] = set()
    for name in sorted(counts):
        members = strata.get(name)
        if members is None:
            raise DomainError(f"stratum {name!r} has no nodes under {attribute!r}")
        want = counts[name]
        if want is None:
            want = len(members)
        if not 0 <= want <= len(members):
            raise DomainError(
                f"stratum {name!r} has {len(members)} nodes, requested {want}")
        chosen |= set(rng.sample(members, want))
    return graph.induced_subgraph(chosen)


def draw(graph: Graph, spec: SampleSpec) -> Graph:
    """Dispatch a SampleSpec to the matching sampler."""
    params = spec.parameters
    if spec.method is SampleMethod.SNOWBALL:
        return snowball_sample(graph, params["seeds"], params["depth"])
    if spec.method is SampleMethod.RANDOM:
        return random_sample(graph, params["count"], spec.seed)
    if spec.method is SampleMethod.STRATIFIED:
        return stratified_sample(graph, params["attribute"], params["counts"], spec.seed)
    raise DomainError(f"unknown sampling method {spec.method!r}")
