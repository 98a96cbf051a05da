"""
Exact divisible-subdivision numbers at micro scale
==================================================

s_q(H) is the least f such that every Z_q-weighting of K_f contains a
q-divisible subdivision of H. Small cases fall to brute force.
"""

from divsub.oracle import audit_result, bound_general, bound_lower, bound_prime, compute_sq, sample_at
from divsub.pattern import cycle_graph, path_graph

for H, q, t, label in [
    (path_graph(2), 2, None, "s_2(P_2)"),
    (path_graph(2), 3, None, "s_3(P_2)"),
    (path_graph(3), 2, None, "s_2(P_3)"),
    (path_graph(3), 2, 1, "s_2(P_3,1)"),
]:
    r = compute_sq(H, q, t, shards=2)
    print(f"{label} = {r.value} ({r.kind}, {r.examined} weightings, lower bound {bound_lower(H.n, H.m, q)})")
    print("   naive audit:", audit_result(r, H, samples=20).ok)

# beyond the guard the answer is only a lower bound
r = compute_sq(path_graph(3), 3, guard=10**5)
print("s_3(P_3):", r.kind, "-", r.note)

# at the proven upper bounds random hosts always succeed
f = bound_prime(3, 2, 3)
s = sample_at(path_graph(3), 3, f, trials=500, seed=0)
print(f"P_3 over Z_3 at f={f}: {s.failure_count} failures in {s.trials}")
print("general bound for a triangle over Z_4:", bound_general(3, 3, 4))
print("C_3, q=2, t=1 would need 2^15 hosts of K_6:", compute_sq(cycle_graph(3), 2, 1, guard=10**4).note)
