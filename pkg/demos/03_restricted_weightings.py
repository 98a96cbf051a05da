"""
Restricted weightings and zero-weight routing
=============================================

Delete one vertex v from any weighting: what remains only ever produces
efficiency values inside the subgroup generated at v. Inside such a host a
connector covering that subgroup can repair any u-v route to weight 0.
"""

from divsub.restricted import (
    check_cycle_weights,
    find_b_connector,
    generate_b_restricted,
    is_b_restricted,
    local_subgroup,
    zero_weight_path,
)
from divsub.weighted import Weighting, path_weight, random_weighting

W = random_weighting(6, 6, seed=0)
for v in range(3):
    d = local_subgroup(W, v).d
    print(f"vertex {v}: subgroup {d}Z_6, stripped host restricted: {bool(is_b_restricted(W.remove_vertex(v), d))}")

# a host that is restricted for 2Z_4
W, d = generate_b_restricted(9, 4, seed=4, divisor=2)
print("planted host: d =", d, "cycles in dZ_q:", bool(check_cycle_weights(W, d)))

u, v = next((a, b) for a in range(9) for b in range(a + 1, 9) if W(a, b) % d == 0)
F = find_b_connector(W, d, forbidden={u, v})
if F is not None:
    P = zero_weight_path(W, F, u, v, d)
    print(f"zero-weight {u}-{v} path {P}: weight {path_weight(W, P)}")

# the precondition check names what is missing
bad = Weighting.from_function(5, 4, lambda a, b: 1)
print(is_b_restricted(bad, 2).reason)
