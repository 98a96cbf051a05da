"""Acceptance criteria 1-6, one recorded PASS/FAIL line each.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines are printed
in the "acceptance criteria" section at the end of the session.
"""

from collections import Counter
from itertools import combinations

import pytest

from corpus import four_connectors, local_corpus, three_connectors, zero_path_cases
from divsub.connectors import reachable_weights, switch_path
from divsub.hamiltonian import FIG_K4, exhaustive_check, find_even_split
from divsub.naive import naive_find
from divsub.oracle import audit_result, bound_general, bound_lower, bound_prime, compute_sq, sample_at
from divsub.pattern import PatternGraph, complete_graph, cycle_graph, path_graph
from divsub.restricted import check_cycle_weights, is_b_restricted, local_subgroup, zero_weight_path
from divsub.subdivision import find_subdivision, find_t_subdivision
from divsub.weighted import all_ones, path_weight, star_witness
from divsub.zq import WeightSet, cauchy_davenport_holds

EXACT = [
    ("s_2(P_2)", path_graph(2), 2, None, 3),
    ("s_3(P_2)", path_graph(2), 3, None, 4),
    ("s_4(P_2)", path_graph(2), 4, None, 5),
    ("s_2(P_3)", path_graph(3), 2, None, 5),
    ("s_2(K_3)", complete_graph(3), 2, None, 6),
    ("s_2(P_2,1)", path_graph(2), 2, 1, 3),
    ("s_2(P_3,1)", path_graph(3), 2, 1, 5),
    ("s_2(C_3,1)", cycle_graph(3), 2, 1, 6),
]


@pytest.fixture(scope="module")
def exact_results():
    return {name: (H, compute_sq(H, q, t)) for name, H, q, t, _ in EXACT}


def test_criterion_1_exact_values(exact_results, record):
    got = []
    ok = True
    for name, H, q, t, want in EXACT:
        r = exact_results[name][1]
        good = r.kind == "exact" and r.value == want
        ok &= good
        got.append(f"{name}={r.value}" + ("" if good else f"({r.kind}, want {want})"))
    record("criterion 1: exact s_q values", ok, ", ".join(got))
    assert ok


def small_patterns():
    for n in range(1, 5):
        for m in range(0, 5):
            for edges in combinations(combinations(range(n), 2), m):
                yield PatternGraph(n, edges)


def test_criterion_2_lower_bound_witnesses(record):
    checked = 0
    bad = []
    for H in small_patterns():
        for q in (2, 3, 4):
            f = bound_lower(H.n, H.m, q) - 1
            if f < 1:
                continue
            checked += 1
            if find_subdivision(all_ones(f, q), H) is not None:
                bad.append((H.n, H.edges, q))
    stars = []
    for q in (3, 5):
        k = (q - 1) // 2
        H, t = path_graph(2), q - 1
        W = star_witness(H.n + t * H.m + k - 1, q, k)
        absent = find_t_subdivision(W, H, t) is None and naive_find(W, H, t) is None
        stars.append(f"q={q} f={W.f}:{'no' if absent else 'FOUND'}")
        if not absent:
            bad.append(("star", q))
    ok = not bad
    record("criterion 2: lower-bound witnesses", ok, f"{checked} all-ones hosts refuted; star {', '.join(stars)}")
    assert ok, bad


def test_criterion_3_hamiltonian(record):
    r3 = exhaustive_check(3)
    k4 = find_even_split(FIG_K4)
    ok = r3.all_pass and r3.examined == 2**15 and k4 is None
    record(
        "criterion 3: even split Hamiltonian cycles",
        ok,
        f"K_6: {r3.examined - r3.failures}/{r3.examined} pass; Figure K4: {'absent' if k4 is None else 'FOUND'}",
    )
    assert ok


def test_criterion_4_lemma_suites(record):
    parts = {}

    # (a) stripping a vertex leaves a graph restricted for its local subgroup
    corpus = local_corpus(1000, seed=2024)
    stripped = []
    fails = 0
    for W in corpus:
        for v in range(W.f):
            d = local_subgroup(W, v).d
            S = W.remove_vertex(v)
            if not is_b_restricted(S, d):
                fails += 1
            stripped.append((S, d))
    parts["a"] = (fails == 0, f"{len(stripped)} stripped hosts")

    # (b) every cycle of a restricted host weighs a multiple of d
    fails = sum(1 for S, d in stripped if S.f >= 3 and not check_cycle_weights(S, d))
    nontrivial = sum(1 for S, d in stripped if d > 1)
    parts["b"] = (fails == 0, f"{nontrivial} with nontrivial B")

    # (c) zero-weight paths through B-connectors
    cases = zero_path_cases(1000, seed=7)
    fails = 0
    for W, F, u, v, d in cases:
        P = zero_weight_path(W, F, u, v, d)
        if path_weight(W, P) != 0 or not set(P[1:-1]) <= F.vertex_set() or (P[0], P[-1]) != (u, v):
            fails += 1
    parts["c"] = (fails == 0, f"{len(cases)} paths")

    # (d) switching realises each reachable shift exactly
    fails = total = 0
    for W, X in three_connectors(1000, seed=8):
        base = path_weight(W, X.base_path)
        for delta in X.delta_set(W):
            total += 1
            if path_weight(W, switch_path(X, W, delta)) != (base + delta) % W.q:
                fails += 1
    parts["d"] = (fails == 0, f"{total} shifts")

    # (e) 4-connector reachable sets and the sumset bound
    fails = total = 0
    for p in (5, 7, 11):
        for W, X in four_connectors(p, 300, seed=p):
            total += 1
            if len(reachable_weights(X, W)) < min(2 * X.s + 1, p):
                fails += 1
    pairs = 0
    for p in (2, 3, 5, 7):
        subsets = [WeightSet.of(p, [x for x in range(p) if mask >> x & 1]) for mask in range(1, 1 << p)]
        for A in subsets:
            for B in subsets:
                pairs += 1
                if not cauchy_davenport_holds(A, B, p):
                    fails += 1
    parts["e"] = (fails == 0, f"{total} connectors, {pairs} subset pairs")

    ok = all(good for good, _ in parts.values())
    detail = "; ".join(f"({k}) {'ok' if good else 'FAIL'} {txt}" for k, (good, txt) in parts.items())
    record("criterion 4: lemma suites", ok, detail)
    assert ok, parts


def test_criterion_5_upper_bound_sampling(record):
    runs = [
        ("P_2 p=3", path_graph(2), 3, bound_prime(2, 1, 3)),
        ("P_3 p=3", path_graph(3), 3, bound_prime(3, 2, 3)),
        ("K_3 p=3", complete_graph(3), 3, bound_prime(3, 3, 3)),
        ("P_2 q=4", path_graph(2), 4, bound_general(2, 1, 4)),
    ]
    out = []
    ok = True
    for label, H, q, f in runs:
        s = sample_at(H, q, f, 10_000, seed=5)
        ok &= s.failure_count == 0
        out.append(f"{label} f={f}: {s.failure_count} failures")
    record("criterion 5: sampled success at proven bounds", ok, "; ".join(out))
    assert ok


def test_criterion_6_oracle_soundness(exact_results, record):
    out = []
    ok = True
    for name, (H, r) in exact_results.items():
        if r.kind != "exact":
            ok = False
            out.append(f"{name}: not exact")
            continue
        rep = audit_result(r, H, samples=100, seed=11)
        ok &= rep.ok
        out.append(f"{name}: {'ok' if rep.ok else 'MISMATCH'}")
    record("criterion 6: naive audit of exact results", ok, ", ".join(out))
    assert ok
