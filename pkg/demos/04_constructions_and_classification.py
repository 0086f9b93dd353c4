"""Constructions and the classification lattice.

Builds evaluation (MRD) codes, the longest near MRD codes from the extended
pseudoregulus system, and direct sums; classifies each and prints the full
report.
"""

import json

from rankgeo import (classify_report, direct_sum, gabidulin, is_mrd,
                     is_near_mrd, is_s_mrd, make_tower, min_rank_distance,
                     near_mrd_length_bound, near_mrd_system,
                     pseudoregulus_system, psi, rank_defect,
                     scattered_dim_bound)

t16 = make_tower(2, 1, 4)

print("== evaluation code [4,2] over F_16 ==")
Cg = gabidulin(t16, 4, 2)
print("d =", min_rank_distance(Cg), " MRD:", is_mrd(Cg),
      " 1-MRD:", is_s_mrd(Cg, 1), " defect:", rank_defect(Cg))

print("\n== longest near MRD code for k = 3, m = 4 ==")
U = near_mrd_system(t16, 3)
C = psi(U)
flag, details = is_near_mrd(C)
print("near MRD:", flag, " n =", C.n, " bound:",
      near_mrd_length_bound(3, 4))
print("three criteria:", details["criterion_profile"],
      details["criterion_dual_sum"], details["criterion_geometric"])

print("\n== pseudoregulus [4,2] over F_16 is scattered at the bound ==")
P = pseudoregulus_system(t16, 2)
print("n =", P.n, " bound:", scattered_dim_bound(2, 4, 1))

print("\n== direct sum of two [4,2,3] codes: a [8,4,3] MRD code ==")
D = direct_sum([Cg, Cg])
print("params:", D.n, D.k, " MRD:", is_mrd(D))

print("\n== full classification report of the near MRD code ==")
print(json.dumps(classify_report(C).to_json_dict(), indent=2))
