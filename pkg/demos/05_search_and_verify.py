"""The scattered search probe and the named verification suites.

The exhaustive search scans canonical subspace representatives of F_16^2
for a maximum scattered system; the verification suites then re-check the
structural statements on exhaustive instance ranges (kept small here; the
full ranges run in the acceptance tests).
"""

from rankgeo import (SearchBudget, is_h_scattered, make_tower,
                     scattered_dim_bound, search_scattered)
from rankgeo.verify import run_suite

t16 = make_tower(2, 1, 4)
t8 = make_tower(2, 1, 3)

print("searching for a maximum scattered [4,2] system over F_16 ...")
U = search_scattered(t16, 2, 1, 4)
print("found:", U is not None, " scattered:", is_h_scattered(U, 1))
print("basis rows:", U.basis.rows)

print("\nasking above the dimension bound returns None immediately:")
print("  bound:", scattered_dim_bound(2, 3, 1),
      " result:", search_scattered(t8, 2, 1, 4))

print("\nrandom-mode search (seeded, reproducible):")
U2 = search_scattered(t16, 2, 1, 4,
                      SearchBudget(max_candidates=5000, mode="random",
                                   seed=5))
print("found:", U2 is not None)

for name in ("theorem-3.3", "prop-5.3", "theorem-6.6"):
    rep = run_suite(name, params={"n_min": 3, "n_max": 4})
    print(f"\nsuite {name}: passed={rep['passed']} "
          f"instances={rep['instances']} checks={rep['checks']}")
