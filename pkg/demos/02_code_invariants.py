"""The worked [4,2] code over F_8: distance, weights, duality.

Walks the full chain: generator -> rank weights -> minimum distance via the
hyperplane picture -> generalized weights by both algorithms -> the dual
code and the duality partition.
"""

from rankgeo import (Mat, dual, generalized_weights_galois,
                     generalized_weights_geometric, is_nondegenerate,
                     make_tower, min_rank_distance,
                     min_rank_distance_bruteforce, new_code, rank_weight)

t8 = make_tower(2, 1, 3)
a, a2 = 2, 4

G = Mat(t8.ext, [[1, 0, a, 0], [0, 1, 0, a2]])
C = new_code(t8, G)
print("code:", C)
print("nondegenerate:", is_nondegenerate(C))

print("\nrank weight of the first generator row:",
      rank_weight(t8, G.rows[0]))

d = min_rank_distance(C)
print("minimum rank distance (hyperplane scan):", d)
print("minimum rank distance (codeword walk):  ",
      min_rank_distance_bruteforce(C))

geo = tuple(generalized_weights_geometric(C))
gal = tuple(generalized_weights_galois(C))
print("\ngeneralized weights, geometric algorithm:", geo)
print("generalized weights, Galois-closure algorithm:", gal)
assert geo == gal

H = dual(C)
print("\ndual generator rows:")
for row in H.G.rows:
    print("  ", row)
dgeo = tuple(generalized_weights_geometric(H))
print("dual weights:", dgeo)

n = C.n
partition = sorted(set(geo) | {n + 1 - w for w in dgeo})
print("duality partition {d_i} u {n+1-d_i^perp}:", partition)
assert partition == list(range(1, n + 1))
