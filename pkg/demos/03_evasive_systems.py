"""Geometry side: systems, evasiveness, spectra, the rank-metric dual.

Uses the worked [5,2] code over F_8 whose system is (1,3)-evasive but not
(1,2)-evasive, and whose dual system is (1,2)- and (2,3)-evasive.
"""

from rankgeo import (Mat, hyperplane_spectrum, intersection_dim, is_evasive,
                     is_h_scattered, make_tower, new_code, phi, psi,
                     rank_metric_dual)

t8 = make_tower(2, 1, 3)
a, a2 = 2, 4

C = new_code(t8, Mat(t8.ext, [[1, 0, a, a2, 1], [0, 1, 1, 0, a]]))
U = phi(C)
print("system:", U)
print("basis rows (= generator columns):")
for row in U.basis.rows:
    print("  ", row)

print("\nhyperplane spectrum:", hyperplane_spectrum(U))
print("so d(psi(U)) = n - max =", U.n - max(hyperplane_spectrum(U)))

for (h, r) in [(1, 3), (1, 2), (1, 1)]:
    flag, wit = is_evasive(U, h, r, witness=True)
    print(f"({h},{r})-evasive: {flag}   witness intersection:",
          wit.intersection_dim)

print("\n1-scattered:", is_h_scattered(U, 1))

Ud = rank_metric_dual(U)
print("\nrank-metric dual:", Ud)
print("dual is (1,2)-evasive:", is_evasive(Ud, 1, 2)[0])
print("dual is (2,3)-evasive:", is_evasive(Ud, 2, 3)[0])

W = Mat(t8.ext, [[0, 1]])
print("\nintersection of the [4,2] worked system with the line <(0,1)>:",
      intersection_dim(phi(new_code(t8, Mat(t8.ext,
                                            [[1, 0, a, 0], [0, 1, 0, a2]]))),
                       W))
