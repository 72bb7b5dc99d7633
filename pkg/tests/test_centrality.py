import math
import random

import numpy as np
import pytest

from helpers import (
    barbell_graph,
    build,
    complete_graph,
    cycle_graph,
    gnm_graph,
    path_graph,
    star_graph,
)
from oracles import betweenness_oracle, closeness_oracle, floyd_warshall
from qagraph import (
    ConvergenceError,
    DomainError,
    Graph,
    NoPathError,
    adjacency_matrix,
    betweenness_centrality,
    closeness_centrality,
    clustering_coefficient,
    degree_centrality,
    diameter_path,
    eigenvector_centrality,
    pagerank,
    shortest_path,
    top_k,
)


# -- degree -------------------------------------------------------------------

def test_degree_centrality_p3():
    scores = degree_centrality(path_graph(3)).scores
    assert scores == {0: 0.5, 1: 1.0, 2: 0.5}


def test_degree_centrality_star():
    scores = degree_centrality(star_graph(4)).scores
    assert scores[0] == 1.0


def test_degree_centrality_single_node():
    g = Graph()
    g.add_node(5)
    assert degree_centrality(g).scores == {5: 0.0}


def test_degree_argmax_invariant_under_weight_scaling():
    g = gnm_graph(10, 18, seed=5, weight_pool=[1.0])
    base = degree_centrality(g).scores
    scaled = build([(e.src, e.dst, e.weight * 7.5) for e in g.edges()],
                   nodes=g.node_ids())
    after = degree_centrality(scaled).scores
    assert max(base, key=lambda v: (base[v], -v)) == max(after, key=lambda v: (after[v], -v))


# -- betweenness ----------------------------------------------------------------

def test_betweenness_p3():
    scores = betweenness_centrality(path_graph(3), normalized=False).scores
    assert scores == {0: 0.0, 1: 1.0, 2: 0.0}


def test_betweenness_k3_zero():
    scores = betweenness_centrality(complete_graph(3), normalized=False).scores
    assert all(s == 0.0 for s in scores.values())


def test_betweenness_star_center():
    # 4 leaves: all C(4,2) leaf pairs transit the center
    scores = betweenness_centrality(star_graph(4), normalized=False).scores
    assert scores[0] == 6.0


def test_betweenness_normalization_p3():
    scores = betweenness_centrality(path_graph(3), normalized=True).scores
    assert scores[1] == 1.0  # (n-1)(n-2)/2 = 1


def test_betweenness_matches_oracle_small_graphs():
    for seed in range(30):
        rng = random.Random(seed)
        n = rng.randint(2, 8)
        g = gnm_graph(n, rng.randint(1, 2 * n), seed, directed=rng.random() < 0.3)
        got = betweenness_centrality(g, normalized=False).scores
        want = betweenness_oracle(g)
        for v in g.node_ids():
            assert got[v] == pytest.approx(want[v], abs=1e-9)


def test_betweenness_weighted_matches_oracle():
    pool = [0.25, 0.5, 0.75, 1.0, 1.5, 2.0]
    for seed in range(15):
        g = gnm_graph(7, 12, seed, weight_pool=pool)
        got = betweenness_centrality(g, normalized=False).scores
        want = betweenness_oracle(g)
        for v in g.node_ids():
            assert got[v] == pytest.approx(want[v], abs=1e-9)


# -- closeness -------------------------------------------------------------------

def test_closeness_p3_middle():
    assert closeness_centrality(path_graph(3)).scores[1] == 1.0


def test_closeness_k4_all_one():
    scores = closeness_centrality(complete_graph(4)).scores
    assert all(s == pytest.approx(1.0) for s in scores.values())


def test_closeness_component_scaling():
    g = build([(0, 1), (1, 2)], nodes=[9])
    scores = closeness_centrality(g).scores
    assert scores[9] == 0.0
    assert scores[1] == pytest.approx(2 / 3)


def test_closeness_matches_oracle():
    for seed in range(20):
        g = gnm_graph(8, random.Random(seed).randint(2, 12), seed)
        got = closeness_centrality(g).scores
        want = closeness_oracle(g)
        for v in g.node_ids():
            assert got[v] == pytest.approx(want[v], abs=1e-9)


# -- eigenvector -------------------------------------------------------------------

def test_eigenvector_c4_uniform():
    scores = eigenvector_centrality(cycle_graph(4)).scores
    for s in scores.values():
        assert s == pytest.approx(0.5, abs=1e-6)


def test_eigenvector_star_center_dominates():
    scores = eigenvector_centrality(star_graph(4)).scores
    assert all(scores[0] > scores[leaf] for leaf in range(1, 5))


def test_eigenvector_edgeless_graph_errors():
    g = Graph()
    g.add_node(0)
    g.add_node(1)
    with pytest.raises(ConvergenceError):
        eigenvector_centrality(g)


def test_eigenvector_residual_contract():
    for seed in range(10):
        g = gnm_graph(12, 24, seed)
        scores = eigenvector_centrality(g, tol=1e-10).scores
        a = adjacency_matrix(g)
        x = np.array([scores[v] for v in g.node_ids()])
        lam = x @ a @ x
        assert np.linalg.norm(a @ x - lam * x) <= 1e-6
        assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-9)
        assert (x >= -1e-12).all()


# -- pagerank ------------------------------------------------------------------------

def test_pagerank_cycle_uniform():
    scores = pagerank(cycle_graph(5, directed=True)).scores
    for s in scores.values():
        assert s == pytest.approx(0.2, abs=1e-9)


def test_pagerank_two_node_closed_form():
    g = build([(0, 1)], directed=True)
    # stationary solve of the dangling-redistribution system
    p_hat = np.array([[0.0, 1.0], [0.5, 0.5]])
    d = 0.85
    expected = np.linalg.solve(np.eye(2) - d * p_hat.T, np.full(2, (1 - d) / 2))
    expected /= expected.sum()
    scores = pagerank(g).scores
    assert scores[0] == pytest.approx(expected[0], abs=1e-9)
    assert scores[1] == pytest.approx(expected[1], abs=1e-9)


def test_pagerank_zero_damping_uniform():
    g = build([(0, 1), (1, 2)], directed=True)
    scores = pagerank(g, damping=0.0).scores
    for s in scores.values():
        assert s == pytest.approx(1 / 3, abs=1e-12)


def test_pagerank_sums_to_one_with_dangling():
    for seed in range(20):
        g = gnm_graph(12, 20, seed, directed=True)
        total = sum(pagerank(g).scores.values())
        assert total == pytest.approx(1.0, abs=1e-9)


def test_pagerank_rejects_bad_damping():
    g = build([(0, 1)], directed=True)
    with pytest.raises(DomainError):
        pagerank(g, damping=1.0)


# -- clustering ----------------------------------------------------------------------

def test_clustering_k3():
    scores, avg = clustering_coefficient(complete_graph(3))
    assert all(s == 1.0 for s in scores.scores.values())
    assert avg == 1.0


def test_clustering_p3_middle_zero():
    scores, _ = clustering_coefficient(path_graph(3))
    assert scores.scores[1] == 0.0


def test_clustering_barbell_bridge_node():
    scores, _ = clustering_coefficient(barbell_graph())
    assert scores.scores[2] == pytest.approx(1 / 3)


# -- shortest path ---------------------------------------------------------------------

def test_shortest_path_p4():
    res = shortest_path(path_graph(4), 0, 3)
    assert res.nodes == [0, 1, 2, 3]
    assert res.length == 3.0


def test_shortest_path_identity():
    res = shortest_path(path_graph(4), 2, 2)
    assert res.nodes == [2]
    assert res.length == 0.0


def test_shortest_path_lexicographic_tie_break():
    # two equal routes 0-1-3 and 0-2-3: the smaller middle node wins
    g = build([(0, 1), (0, 2), (1, 3), (2, 3)])
    assert shortest_path(g, 0, 3).nodes == [0, 1, 3]


def test_shortest_path_weighted():
    g = build([(0, 1, 1.0), (1, 2, 1.0), (0, 2, 5.0)])
    res = shortest_path(g, 0, 2)
    assert res.nodes == [0, 1, 2]
    assert res.length == pytest.approx(2.0)


def test_shortest_path_unreachable():
    g = build([(0, 1)], nodes=[5])
    with pytest.raises(NoPathError):
        shortest_path(g, 0, 5)


def test_shortest_path_symmetric_lengths():
    for seed in range(10):
        g = gnm_graph(9, 14, seed)
        ids = g.node_ids()
        rng = random.Random(seed)
        u, v = rng.sample(ids, 2)
        try:
            forward = shortest_path(g, u, v).length
        except NoPathError:
            with pytest.raises(NoPathError):
                shortest_path(g, v, u)
            continue
        assert forward == pytest.approx(shortest_path(g, v, u).length)


def test_adding_edge_never_increases_distances():
    rng = random.Random(11)
    for seed in range(8):
        g = gnm_graph(8, 10, seed)
        _, before = floyd_warshall(g)
        ids = g.node_ids()
        u, v = rng.sample(ids, 2)
        g2 = build([(e.src, e.dst, e.weight) for e in g.edges()] + [(u, v, 1.0)],
                   nodes=ids)
        _, after = floyd_warshall(g2)
        for i in range(len(ids)):
            for j in range(len(ids)):
                assert after[i][j] <= before[i][j] + 1e-12


# -- diameter -----------------------------------------------------------------------

def test_diameter_p4():
    res = diameter_path(path_graph(4))
    assert (res.src, res.dst) == (0, 3)
    assert res.length == 3.0


def test_diameter_k3():
    assert diameter_path(complete_graph(3)).length == 1.0


def test_diameter_barbell():
    res = diameter_path(barbell_graph())
    assert res.length == 3.0
    assert res.src in {0, 1} and res.dst in {4, 5}


def test_diameter_disconnected_requires_flag():
    g = build([(0, 1)], nodes=[5])
    with pytest.raises(DomainError):
        diameter_path(g)
    res = diameter_path(g, largest_component=True)
    assert res.length == 1.0


# -- top_k ---------------------------------------------------------------------------

def test_top_k_p3_degree():
    assert top_k(degree_centrality(path_graph(3)), 1) == [(1, 1.0)]


def test_top_k_tie_breaks_by_id():
    scores = degree_centrality(complete_graph(4))
    assert top_k(scores, 2) == [(0, 1.0), (1, 1.0)]


def test_top_k_zero_and_overlong():
    scores = degree_centrality(path_graph(3))
    assert top_k(scores, 0) == []
    assert len(top_k(scores, 99)) == 3
    with pytest.raises(DomainError):
        top_k(scores, -1)
