"""rankgeo: exact computations for rank-metric codes and q-systems.

The package follows the code <-> geometry dictionary for F_{q^m}-linear
rank-metric codes: a nondegenerate [n,k] code corresponds to an n-dimensional
F_q-subspace of F_{q^m}^k spanning the whole space, and every metric
invariant of the code (minimum rank distance, generalized rank weights) is an
intersection statistic of that subspace.  All arithmetic is exact.
"""

from .errors import BudgetError, ConsistencyError, DomainError, RankGeoError
from .fields import (FieldTower, arith, flatten, frobenius_q, make_tower,
                     trace_to_base, unflatten)
from .linalg import (DEFAULT_BUDGET, Mat, enumerate_subspaces, fq_span_dim,
                     gaussian_binomial, intersect_fq, kernel, rank, rref)
from .codes import (RankMetricCode, WeightProfile, ZeroCode, dual,
                    generalized_weights_galois, generalized_weights_geometric,
                    is_nondegenerate, min_rank_distance,
                    min_rank_distance_bruteforce, new_code, rank_weight)
from .qsystems import (EvasiveWitness, QSystem, hyperplane_spectrum,
                       intersection_dim, is_evasive, is_h_scattered, phi, psi,
                       rank_metric_dual)
from .classify import (ClassificationReport, classify_report, evasive_feasible,
                       gen_weight_bound, hscattered_code_link, is_mrd,
                       is_near_mrd, is_quasi_mrd, is_s_mrd,
                       near_mrd_length_bound, quasi_mrd_link_condition,
                       rank_defect, scattered_dim_bound, singleton_max_d)
from .constructions import (SearchBudget, direct_sum, gabidulin,
                            near_mrd_system, pseudoregulus_system,
                            search_scattered)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
