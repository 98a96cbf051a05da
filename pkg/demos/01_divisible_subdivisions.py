"""
Zero-sum subdivisions in a weighted complete graph
==================================================

Weight the edges of K_f with residues mod q and ask for a subdivision of a
small pattern in which every subdivided edge is a path of weight 0.
"""

from divsub.pattern import complete_graph, path_graph
from divsub.subdivision import find_subdivision, find_t_subdivision, verify_embedding
from divsub.weighted import all_ones, random_weighting, serialize_weighting

# all-ones K_3 over Z_2: the edge 0-1 is odd, but the detour 0-2-1 is even
W = all_ones(3, 2)
print(serialize_weighting(W))
H = path_graph(2)
E = find_subdivision(W, H)
print("branch map", E.branch_map, "paths", E.paths)
print("verified:", bool(verify_embedding(W, H, E)))

# over Z_3 the same host is too small: any path has weight 1 or 2
print("all-ones K_3 over Z_3:", find_subdivision(all_ones(3, 3), H))

# t-subdivisions fix every path length to t+1 edges
W = random_weighting(7, 2, seed=1)
E = find_t_subdivision(W, complete_graph(3), t=1)
print("1-subdivided triangle in a random K_7:", E.paths if E else None)

# a certificate that lies gets caught
if E is not None:
    from divsub.subdivision import SubdivisionEmbedding

    forged = SubdivisionEmbedding(E.branch_map, ((E.branch_map[0], E.branch_map[1]),) + E.paths[1:])
    print(verify_embedding(W, complete_graph(3), forged, t=1).reason)
