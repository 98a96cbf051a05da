from itertools import permutations

import numpy as np
import pytest

from corpus import local_corpus, zero_path_cases
from divsub.connectors import Connector, is_efficient_clique
from divsub.restricted import (
    PreconditionError,
    _cycles,
    check_cycle_weights,
    find_b_connector,
    generate_b_restricted,
    is_b_restricted,
    local_subgroup,
    zero_weight_path,
)
from divsub.weighted import Weighting, all_ones, all_zeros, cycle_weight, path_weight, random_weighting


def test_is_b_restricted_examples():
    assert is_b_restricted(all_zeros(5, 4), 4)
    v = is_b_restricted(all_ones(4, 4), 2)
    assert not v and "triple" in v.reason
    v = is_b_restricted(all_ones(4, 4), 4)
    assert not v and "edge" in v.reason
    with pytest.raises(ValueError):
        is_b_restricted(all_ones(4, 4), 3)


def test_b_restricted_matches_definition():
    rng = np.random.default_rng(0)
    for _ in range(300):
        q = int(rng.integers(2, 9))
        W = random_weighting(int(rng.integers(2, 6)), q, rng)
        for d in (d for d in range(1, q + 1) if q % d == 0):
            edges_ok = all((2 * w) % d == 0 for _, _, w in W.edges())
            triples_ok = all(
                (W(x, y) + W(y, z) - W(x, z)) % q % d == 0 for x, y, z in permutations(range(W.f), 3)
            )
            assert bool(is_b_restricted(W, d)) == (edges_ok and triples_ok)


def test_local_subgroup_examples():
    assert local_subgroup(all_zeros(4, 6), 0).d == 6
    W = Weighting.from_function(4, 4, lambda u, v: 1 if u == 0 else 2)
    assert local_subgroup(W, 0).d == 2
    with pytest.raises(ValueError):
        local_subgroup(all_zeros(2, 3), 0)


def test_local_subgroup_random_k6():
    for seed in range(20):
        W = random_weighting(6, 6, seed)
        d = local_subgroup(W, 0).d
        assert 6 % d == 0 and is_b_restricted(W.remove_vertex(0), d)


def test_local_lemma_property():
    for W in local_corpus(400, seed=11):
        for v in range(W.f):
            d = local_subgroup(W, v).d
            assert is_b_restricted(W.remove_vertex(v), d)


def test_generate_b_restricted():
    seen = set()
    for seed in range(300):
        rng = np.random.default_rng(seed)
        q = int(rng.integers(2, 9))
        f = int(rng.integers(2, 8))
        W, d = generate_b_restricted(f, q, seed)
        assert W.f == f and q % d == 0 and is_b_restricted(W, d)
        W, d = generate_b_restricted(f, q, seed, divisor=2 if q % 2 == 0 else 1)
        assert is_b_restricted(W, d)
        seen.add(d)
    assert len(seen) > 1
    assert generate_b_restricted(5, 6, 3) == generate_b_restricted(5, 6, 3)


def test_cycle_enumeration_counts():
    # K_5 has 10 triangles, 15 four-cycles and 12 five-cycles
    assert len(list(_cycles(5, 5))) == 37


def test_check_cycle_weights_examples():
    assert check_cycle_weights(all_zeros(5, 3), 3)
    with pytest.raises(PreconditionError):
        check_cycle_weights(all_ones(4, 4), 4)


def test_cycle_lemma_property():
    rng = np.random.default_rng(4)
    for _ in range(150):
        q = int(rng.integers(2, 9))
        W, d = generate_b_restricted(int(rng.integers(3, 8)), q, rng, divisor=int(rng.choice([x for x in range(1, q + 1) if q % x == 0])))
        assert check_cycle_weights(W, d)
        for c in _cycles(W.f, min(W.f, 5)):
            assert cycle_weight(W, c) % d == 0


def test_subgraph_closure():
    rng = np.random.default_rng(8)
    for _ in range(100):
        q = int(rng.integers(2, 9))
        W, d = generate_b_restricted(7, q, rng, divisor=2 if q % 2 == 0 else 1)
        k = int(rng.integers(2, 7))
        sub = sorted(rng.choice(7, size=k, replace=False).tolist())
        assert is_b_restricted(W.induced(sub), d)


def test_find_b_connector_covers_subgroup():
    for W, F, u, v, d in zero_path_cases(40, seed=2):
        assert not F.vertex_set() & {u, v}
        assert {x for x in range(W.q) if x % d == 0} <= F.delta_set(W).members


def test_zero_weight_path_trivial_subgroup():
    W = all_zeros(5, 3)
    F = find_b_connector(W, 3, forbidden={3, 4})
    # all-zero weightings have no efficient triple at all
    assert F is None
    W = Weighting.from_edges(5, 4, {(0, 1): 2}, default=0)
    F = Connector((is_efficient_clique(W, (0, 1, 2), 0, 2),), 4)
    P = zero_weight_path(W, F, 3, 4, 2)
    assert P == (3, 0, 2, 4) and path_weight(W, P) == 0


def test_zero_weight_path_z4():
    W = Weighting.from_edges(6, 4, {(0, 1): 2, (3, 4): 2, (2, 5): 2}, default=0)
    assert is_b_restricted(W, 2)
    F = find_b_connector(W, 2, forbidden={3, 4})
    P = zero_weight_path(W, F, 3, 4, 2)
    assert path_weight(W, P) == 0
    assert set(P[1:-1]) <= F.vertex_set()


def test_zero_path_lemma_property():
    for W, F, u, v, d in zero_path_cases(200, seed=5):
        P = zero_weight_path(W, F, u, v, d)
        assert path_weight(W, P) == 0
        assert (P[0], P[-1]) == (u, v) and set(P[1:-1]) <= F.vertex_set()


def test_zero_weight_path_preconditions():
    W = Weighting.from_edges(6, 4, {(0, 1): 2, (3, 4): 2, (2, 5): 2}, default=0)
    F = find_b_connector(W, 2, forbidden={3, 4})
    with pytest.raises(PreconditionError, match="inside|outside"):
        zero_weight_path(W, F, F.endpoints[0], 4, 2)
    bad = Weighting.from_edges(6, 4, {(0, 1): 2, (3, 4): 1, (2, 5): 2}, default=0)
    with pytest.raises(PreconditionError, match="restricted"):
        zero_weight_path(bad, F, 3, 4, 2)
    with pytest.raises(PreconditionError, match="B-connector"):
        zero_weight_path(W, F, 3, 4, 1)
    # a weight-1 star at vertex 3 is 2-restricted over Z_4 yet w(34) = 1
    weights = {(a, b): 1 if 3 in (a, b) else 0 for a in range(6) for b in range(a + 1, 6)}
    star = Weighting.from_edges(6, 4, {**weights, (0, 1): 2, (2, 5): 2})
    assert is_b_restricted(star, 2)
    with pytest.raises(PreconditionError, match="w\\(uv\\)"):
        zero_weight_path(star, F, 3, 4, 2)
