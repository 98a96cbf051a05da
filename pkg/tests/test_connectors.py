from itertools import permutations

import numpy as np
import pytest

from divsub.connectors import (
    Connector,
    build_connector,
    connector_to_json,
    efficiency_value,
    is_efficient_clique,
    path_with_weight,
    reachable_weights,
    switch_path,
)
from divsub.subdivision import SearchBudgetExceeded
from divsub.weighted import Weighting, all_ones, all_zeros, path_weight, random_weighting
from divsub.zq import WeightSet, is_prime


def test_efficiency_value_examples():
    W = Weighting.from_edges(3, 2, {(0, 1): 1, (1, 2): 0, (0, 2): 0})
    assert efficiency_value(W, 0, 1, 2) == 1
    assert efficiency_value(all_ones(3, 3), 0, 1, 2) == 1
    assert efficiency_value(all_ones(3, 2), 0, 1, 2) == 1
    with pytest.raises(ValueError):
        efficiency_value(W, 0, 0, 2)


def test_efficient_clique_examples():
    W = Weighting.from_edges(3, 2, {(0, 1): 1, (1, 2): 0, (0, 2): 0})
    c = is_efficient_clique(W, (0, 1, 2), 0, 2)
    assert c is not None and c.path_weights.members == {0, 1}
    assert is_efficient_clique(all_zeros(3, 5), (0, 1, 2), 0, 2) is None


def test_efficient_k4_all_ones_z5():
    W = all_ones(4, 5)
    # the five 0 -> 3 paths in K_4: 0-3, 0-1-3, 0-2-3, 0-1-2-3, 0-2-1-3
    paths = [(0, 3)] + [(0, a, 3) for a in (1, 2)] + [(0,) + p + (3,) for p in permutations((1, 2))]
    expected = {path_weight(W, p) for p in paths}
    assert expected == {1, 2, 3}
    c = is_efficient_clique(W, (0, 1, 2, 3), 0, 3)
    assert c is not None and c.path_weights.members == expected


def test_efficiency_agrees_with_triangle_definition():
    rng = np.random.default_rng(3)
    for _ in range(500):
        q = int(rng.integers(2, 9))
        W = random_weighting(3, q, rng)
        for x, y, z in permutations(range(3)):
            assert (is_efficient_clique(W, (x, y, z), x, z) is not None) == (efficiency_value(W, x, y, z) != 0)


def test_build_connector_examples():
    W = all_ones(7, 3)
    X = build_connector(W, 3, 3)
    assert X is not None and len(X.vertex_set()) == 7
    assert X.efficiencies(W) == (1, 1, 1)
    assert X.delta_set(W).members == {0, 1, 2}
    assert build_connector(all_zeros(9, 3), 3, 2) is None
    Y = build_connector(all_ones(7, 5), 4, 2)
    assert Y is not None and len(Y.vertex_set()) == 7


def test_build_connector_respects_forbidden_and_budget():
    W = all_ones(9, 3)
    X = build_connector(W, 3, 2, forbidden={0, 1})
    assert not X.vertex_set() & {0, 1}
    assert build_connector(W, 3, 4, forbidden={0, 1}) is None
    with pytest.raises(SearchBudgetExceeded):
        build_connector(all_zeros(9, 3), 3, 3, budget=10)


def test_switch_path_examples():
    W = Weighting.from_edges(3, 2, {(0, 1): 1, (1, 2): 0, (0, 2): 0})
    X = Connector((is_efficient_clique(W, (0, 1, 2), 0, 2),), 2)
    assert switch_path(X, W, 0) == X.base_path == (0, 2)
    Q = switch_path(X, W, 1)
    assert Q == (0, 1, 2) and path_weight(W, Q) == 1
    W = all_ones(7, 3)
    X = build_connector(W, 3, 3)
    Q = switch_path(X, W, 2)
    assert len(Q) == len(X.base_path) + 2
    assert path_weight(W, Q) == (path_weight(W, X.base_path) + 2) % 3


def test_switch_path_rejects_unreachable():
    W = Weighting.from_edges(3, 4, {(0, 1): 2, (1, 2): 0, (0, 2): 0})
    X = Connector((is_efficient_clique(W, (0, 1, 2), 0, 2),), 4)
    assert X.delta_set(W).members == {0, 2}
    with pytest.raises(ValueError):
        switch_path(X, W, 1)


def test_switching_fuzz():
    rng = np.random.default_rng(5)
    built = 0
    for _ in range(300):
        q = int(rng.integers(2, 9))
        s = int(rng.integers(1, 5))
        W = random_weighting(2 * s + 1 + int(rng.integers(0, 3)), q, rng)
        X = build_connector(W, 3, s)
        if X is None:
            continue
        built += 1
        base = path_weight(W, X.base_path)
        deltas = X.delta_set(W)
        for delta in range(q):
            if delta in deltas:
                Q = switch_path(X, W, delta)
                assert len(set(Q)) == len(Q)
                assert (Q[0], Q[-1]) == X.endpoints
                assert set(Q) <= X.vertex_set()
                assert path_weight(W, Q) == (base + delta) % q
            else:
                with pytest.raises(ValueError):
                    switch_path(X, W, delta)
    assert built > 200


def connector_paths(X, f):
    """Every x_1 -> x_{s+1} simple path using only edges inside a single clique."""
    inside = set()
    for c in X.cliques:
        for a in c.vertices:
            for b in c.vertices:
                if a != b:
                    inside.add((a, b))
    start, end = X.endpoints
    out = []

    def grow(path):
        if path[-1] == end:
            out.append(tuple(path))
            return
        for y in range(f):
            if y not in path and (path[-1], y) in inside:
                grow(path + [y])

    grow([start])
    return out


def test_reachable_weights_examples():
    W = all_ones(4, 5)
    X = build_connector(W, 4, 1)
    assert len(reachable_weights(X, W)) == 3
    W = all_ones(7, 5)
    X = build_connector(W, 4, 2)
    assert reachable_weights(X, W).members == set(range(5))
    assert (WeightSet.of(5, {1, 2, 3}) + WeightSet.of(5, {1, 2, 3})).members == set(range(5))
    W = all_ones(10, 7)
    X = build_connector(W, 4, 3)
    assert reachable_weights(X, W).members == set(range(7))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_four_connector_bound_fuzz(p):
    rng = np.random.default_rng(p)
    built = 0
    for _ in range(60):
        s = int(rng.integers(1, 4))
        W = random_weighting(3 * s + 1 + int(rng.integers(0, 2)), p, rng)
        X = build_connector(W, 4, s)
        if X is None:
            continue
        built += 1
        R = reachable_weights(X, W)
        assert len(R) >= min(2 * s + 1, p)
        if s <= 2:
            assert R.members == {path_weight(W, P) for P in connector_paths(X, W.f)}
        for r in R:
            P = path_with_weight(X, W, r)
            assert path_weight(W, P) == r and (P[0], P[-1]) == X.endpoints
    assert built > 20


def test_connector_rejects_bad_chains():
    W = all_ones(6, 3)
    a = is_efficient_clique(W, (0, 1, 2), 0, 2)
    b = is_efficient_clique(W, (2, 3, 4), 2, 4)
    c = is_efficient_clique(W, (3, 4, 5), 3, 5)
    Connector((a, b), 3)
    with pytest.raises(ValueError):
        Connector((a, c), 3)


def test_connector_json():
    W = all_ones(7, 3)
    doc = connector_to_json(build_connector(W, 3, 3), W)
    assert doc["junctions"] == [0, 1, 3, 5] and doc["efficiencies"] == [1, 1, 1]
