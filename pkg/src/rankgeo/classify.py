"""Bounds, defects and the MRD / near MRD / quasi-MRD classification lattice.

All bound expressions are evaluated in exact integer arithmetic with
explicit floors and ceilings; there is no floating point anywhere in the
classification.  Predicates that admit several independent characterizations
(near MRD, the scattered/code equivalences) evaluate every side and raise
ConsistencyError on disagreement: that signal is reserved for a proven
equivalence coming apart, the loudest error the package can emit.

Flag conventions: "MRD" means the parameters meet the rank-metric Singleton
bound m*k <= min(m(n-d+1), n(m-d+1)) with equality, while "s-MRD" means the
s-th generalized weight equals n-k+s.  A 1-MRD code is always MRD; an MRD
code need not be 1-MRD (n and m are not interchangeable here), so reports
carry both flags.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .codes import (RankMetricCode, dual, generalized_weights_geometric,
                    is_nondegenerate, min_rank_distance, WeightProfile,
                    ZeroCode)
from .errors import ConsistencyError, DomainError
from .qsystems import QSystem, is_evasive, is_h_scattered, phi, psi


# ---------------------------------------------------------------------------
# parameter-level bounds
# ---------------------------------------------------------------------------

def singleton_max_d(n: int, k: int, m: int) -> int:
    """Largest d allowed by m*k <= min(m(n-d+1), n(m-d+1))."""
    if not 1 <= k <= n or m < 1:
        raise DomainError("need 1 <= k <= n and m >= 1")
    return min(n - k + 1, m - math.ceil(k * m / n) + 1)


def gen_weight_bound(n: int, k: int, m: int, s: int) -> int:
    """Upper bound on the s-th generalized rank weight:
    min(n-k+s, s*m, floor(m(n-k)/n) + m(s-1) + 1)."""
    if not 1 <= s <= k:
        raise DomainError(f"need 1 <= s <= k, got s={s}, k={k}")
    return min(n - k + s, s * m, (m * (n - k)) // n + m * (s - 1) + 1)


def singleton_holds(n: int, k: int, m: int, d: int) -> bool:
    return m * k <= min(m * (n - d + 1), n * (m - d + 1))


def scattered_dim_bound(k: int, m: int, h: int) -> int:
    """Largest possible F_q-dimension of an h-scattered system: floor(km/(h+1))."""
    if not 0 <= h < k:
        raise DomainError(f"need 0 <= h < k, got h={h}, k={k}")
    return (k * m) // (h + 1)


def evasive_feasible(k: int, m: int, h: int, r: int,
                     n: int) -> tuple[bool, tuple[str, ...]]:
    """Necessary parameter conditions for an (h,r)-evasive [n,k] system.

    Returns (feasible, violated-condition names).  These are necessary
    conditions only, never a promise that a system exists.  The conditions
    assume a proper system (n > k); for n = k the rational subspace F_q^k is
    (h,h)-evasive for every h < k, so nothing is ruled out there.
    """
    if not 0 <= h < k:
        raise DomainError(f"need 0 <= h < k, got h={h}, k={k}")
    violated: list[str] = []
    if r < h:
        violated.append("r >= h")
    if n > k:
        # r >= h - 1 + (h+1)/(m-1), cleared of denominators
        if m == 1 or (r - h + 1) * (m - 1) < h + 1:
            violated.append("cor-4.7-1")
        if n > k * m - h * m + r:
            violated.append("cor-4.7-2")
        # when r <= mh/(m-1): n <= km / (r + 1 - m(r-h))
        if m > 1 and r * (m - 1) <= m * h:
            denom = r + 1 - m * (r - h)
            if denom > 0 and n * denom > k * m:
                violated.append("cor-4.7-3")
        if h == r:
            if m < h + 2:
                violated.append("cor-4.8")
            if n > scattered_dim_bound(k, m, h):
                violated.append("cor-4.4")
        if h == k - 1 and k * m > n * (m - n + r + 1):
            violated.append("cor-4.5")
    return (not violated, tuple(violated))


def near_mrd_length_bound(k: int, m: int) -> Optional[int]:
    """Largest length of a near MRD code of dimension k over a degree-m
    extension; None when m < k (no such code exists)."""
    if k < 1 or m < 1:
        raise DomainError("need k >= 1 and m >= 1")
    if m < k:
        return None
    return m + 2 if m == 2 * k - 2 else m + 1


def near_mrd_length_bound_raw(k: int, m: int) -> int:
    """The coarser bound min(floor(km/(k-1)), m + t) with
    t = max{i : i^2 + (m-k-1)i - m <= 0}; exposed for cross-checking
    against ``near_mrd_length_bound`` (which is never larger)."""
    if k < 1 or m < 1:
        raise DomainError("need k >= 1 and m >= 1")
    t = 0
    i = 1
    while i * i + (m - k - 1) * i - m <= 0:
        t = i
        i += 1
    if k == 1:
        return m + t
    return min((k * m) // (k - 1), m + t)


def quasi_mrd_link_condition(k: int, m: int, h: int) -> int:
    """km - (h+2) * floor(km/(h+1)); the quasi-maximum <-> quasi-MRD link
    is active exactly when this is negative."""
    return k * m - (h + 2) * ((k * m) // (h + 1))


# ---------------------------------------------------------------------------
# code-level predicates
# ---------------------------------------------------------------------------

def is_mrd(C: RankMetricCode, budget: int | None = None) -> bool:
    """Parameters meet the Singleton bound with equality (uses only d)."""
    d = min_rank_distance(C, budget=budget)
    m, n, k = C.tower.m, C.n, C.k
    return m * k == min(m * (n - d + 1), n * (m - d + 1))


def is_s_mrd(C: RankMetricCode, s: int, budget: int | None = None) -> bool:
    """d_s = n - k + s.  Monotone: s-MRD implies s'-MRD for s <= s' <= k."""
    profile = generalized_weights_geometric(C, budget=budget)
    return profile.weight(s) == C.n - C.k + s


def rank_defect(C: RankMetricCode, budget: int | None = None) -> int:
    """m - ceil(km/n) - d + 1; nonnegative for every code."""
    d = min_rank_distance(C, budget=budget)
    m, n, k = C.tower.m, C.n, C.k
    return m - math.ceil(k * m / n) - d + 1


def is_quasi_mrd(C: RankMetricCode, budget: int | None = None) -> bool:
    return rank_defect(C, budget=budget) == 0


def is_near_mrd(C: RankMetricCode,
                budget: int | None = None) -> tuple[bool, dict]:
    """Near MRD: d = n-k and every higher generalized weight is extremal.

    Evaluates three independent characterizations and asserts agreement:

    1. the weight profile test, which by monotonicity and the generalized
       Singleton bound only needs the first two weights;
    2. d(C) + d(dual) = n ("dually almost MRD");
    3. the geometric test: the column-span system is (k-2)-scattered, not
       (k-1)-scattered, and (k-1,k)-evasive.

    The geometric clause needs k >= 2; for k = 1 only the first two are
    compared.  For k = n the dual is the zero code and d = n - k = 0 is
    unattainable, so the answer is False without the cross-check.
    """
    ok, why = is_nondegenerate(C)
    if not ok:
        raise DomainError(f"is_near_mrd requires a nondegenerate code; {why}")
    n, k = C.n, C.k
    details: dict = {}
    if k == n:
        details["reason"] = "k = n: d cannot equal n - k = 0"
        return False, details
    profile = generalized_weights_geometric(C, budget=budget)
    d = profile.weight(1)
    crit1 = d == n - k and (k < 2 or profile.weight(2) == n - k + 2)
    details["profile"] = tuple(profile)
    details["criterion_profile"] = crit1

    Cd = dual(C)
    assert not isinstance(Cd, ZeroCode)
    dd = min_rank_distance(Cd, budget=budget)
    crit2 = d + dd == n
    details["dual_distance"] = dd
    details["criterion_dual_sum"] = crit2

    sides = {"profile": crit1, "dual_sum": crit2}
    if k >= 2:
        U = phi(C)
        a = is_h_scattered(U, k - 2, budget=budget)
        b = not is_h_scattered(U, k - 1, budget=budget)
        c = is_evasive(U, k - 1, k, budget=budget)[0]
        crit3 = a and b and c
        details["criterion_geometric"] = crit3
        details["geometric_parts"] = {
            "k_minus_2_scattered": a,
            "not_k_minus_1_scattered": b,
            "k_minus_1_k_evasive": c,
        }
        sides["geometric"] = crit3
    if len(set(sides.values())) != 1:
        raise ConsistencyError(
            f"near MRD criteria disagree on {C!r}: {sides}; details {details}")
    return crit1, details


def hscattered_code_link(obj: QSystem | RankMetricCode, h: int,
                         budget: int | None = None) -> bool:
    """Shared truth value of the h-scattered <-> code-parameter equivalences.

    Every applicable restatement is evaluated independently:

    * always: U h-scattered <-> psi(U) is (k-h)-MRD;
    * k < n:  U h-scattered <-> Rdef(dual) <= floor(km/n) - h - 1;
    * n = floor(km/(h+1)): the previous bound becomes floor(eps/a) where
      km = a(h+1) + eps (quasi-maximum case);
    * additionally km - (h+2)floor(km/(h+1)) < 0: <-> dual is quasi-MRD;
    * (h+1) | km and n = km/(h+1): <-> psi(U) is MRD.

    Any disagreement raises ConsistencyError carrying both sides' values.
    """
    if isinstance(obj, RankMetricCode):
        U = phi(obj)
        C = obj
    else:
        U = obj
        C = psi(U)
    n, k, m = U.n, U.k, U.tower.m
    if not 0 <= h < k:
        raise DomainError(f"need 0 <= h < k, got h={h}, k={k}")
    sides: dict[str, bool] = {}
    sides["h_scattered"] = is_h_scattered(U, h, budget=budget)
    sides["k_minus_h_mrd"] = is_s_mrd(C, k - h, budget=budget)
    if k < n:
        Cd = dual(C)
        assert not isinstance(Cd, ZeroCode)
        rdef_dual = rank_defect(Cd, budget=budget)
        sides["dual_defect_bound"] = rdef_dual <= (k * m) // n - h - 1
        if n == (k * m) // (h + 1):
            a = (k * m) // (h + 1)
            eps = k * m - (h + 1) * a
            sides["quasi_maximum_defect_bound"] = rdef_dual <= eps // a
            if quasi_mrd_link_condition(k, m, h) < 0:
                sides["dual_quasi_mrd"] = rdef_dual == 0
            if eps == 0:
                sides["code_mrd"] = is_mrd(C, budget=budget)
    values = set(sides.values())
    if len(values) != 1:
        raise ConsistencyError(
            f"scattered/code equivalences disagree for h={h} on {C!r}: {sides}")
    return values.pop()


# ---------------------------------------------------------------------------
# aggregated report
# ---------------------------------------------------------------------------

@dataclass
class ClassificationReport:
    """All bounds and flags for one code; every flag is recomputable from
    the stored numeric fields.  Fields requiring nondegeneracy are None when
    the code is degenerate; the defect carries an advisory flag for n <= m,
    where the notion is degenerate (though still well defined)."""

    n: int
    k: int
    m: int
    q: int
    d: int
    nondegenerate: bool
    rank_defect: int
    defect_advisory_n_le_m: bool
    flags: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    profile: Optional[tuple[int, ...]] = None
    dual_profile: Optional[tuple[int, ...]] = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "q": self.q,
            "d": self.d,
            "nondegenerate": self.nondegenerate,
            "profile": list(self.profile) if self.profile else None,
            "dual_profile": (list(self.dual_profile)
                             if self.dual_profile else None),
            "rank_defect": self.rank_defect,
            "defect_advisory_n_le_m": self.defect_advisory_n_le_m,
            "flags": dict(self.flags),
            "bounds": dict(self.bounds),
        }


def classify_report(C: RankMetricCode,
                    budget: int | None = None) -> ClassificationReport:
    """Self-consistent report; every flag agrees with its standalone
    operation.  Flags requiring nondegeneracy are marked unavailable (None)
    when it fails."""
    n, k, m, q = C.n, C.k, C.tower.m, C.tower.q
    d = min_rank_distance(C, budget=budget)
    nondeg = is_nondegenerate(C)[0]
    defect = rank_defect(C, budget=budget)
    flags: dict = {
        "is_nondegenerate": nondeg,
        "is_mrd": m * k == min(m * (n - d + 1), n * (m - d + 1)),
        "is_quasi_mrd": defect == 0,
    }
    bounds: dict = {
        "singleton_max_d": singleton_max_d(n, k, m),
        "gen_weight_bounds": [gen_weight_bound(n, k, m, s)
                              for s in range(1, k + 1)],
        "near_mrd_length_bound": near_mrd_length_bound(k, m),
        "near_mrd_length_bound_raw": near_mrd_length_bound_raw(k, m),
    }
    profile = dual_profile = None
    if nondeg:
        prof = generalized_weights_geometric(C, budget=budget)
        profile = tuple(prof)
        flags["is_s_mrd"] = {s: prof.weight(s) == n - k + s
                             for s in range(1, k + 1)}
        flags["is_near_mrd"] = is_near_mrd(C, budget=budget)[0]
        if k < n:
            Cd = dual(C)
            if is_nondegenerate(Cd)[0]:
                dual_profile = tuple(
                    generalized_weights_geometric(Cd, budget=budget))
    else:
        flags["is_s_mrd"] = None
        flags["is_near_mrd"] = None
    return ClassificationReport(
        n=n, k=k, m=m, q=q, d=d, nondegenerate=nondeg,
        rank_defect=defect, defect_advisory_n_le_m=n <= m,
        flags=flags, bounds=bounds,
        profile=profile, dual_profile=dual_profile)
