"""
Connectors: chains of small cliques with adjustable path weight
===============================================================

An efficient triangle x-y-x' offers two x-x' paths of different weight.
Gluing s of them end to end gives a connector whose through-path can be
shifted by any sum of the individual gaps.
"""

from divsub.connectors import build_connector, reachable_weights, switch_path
from divsub.weighted import all_ones, path_weight, random_weighting
from divsub.zq import WeightSet, cauchy_davenport_holds

W = all_ones(7, 3)
X = build_connector(W, t=3, s=3)
print("junctions", X.junctions, "efficiencies", X.efficiencies(W))
print("shifts available:", sorted(X.delta_set(W)))
base = path_weight(W, X.base_path)
for delta in X.delta_set(W):
    Q = switch_path(X, W, delta)
    print(f"  shift {delta}: {Q} weighs {path_weight(W, Q)} (base {base})")

# K_4 links over a prime field: each offers three weights, and sumsets grow fast
W = random_weighting(10, 7, seed=3)
Y = build_connector(W, t=4, s=3)
if Y is not None:
    R = reachable_weights(Y, W)
    print(f"4-connector with s={Y.s} reaches {len(R)} of 7 residues: {sorted(R)}")

A, B = WeightSet.of(7, {0, 1}), WeightSet.of(7, {0, 3, 5})
print("A+B =", sorted(A + B), "bound holds:", cauchy_davenport_holds(A, B, 7))
