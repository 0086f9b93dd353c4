"""Named verification suites over exhaustive and seeded-random instance sets.

Each suite re-checks one statement of the theory on every instance in its
range and reports per-instance pass/fail, with the first counterexample
serialized in full (code document plus both sides' values).  Suites are
data-driven: a registry maps the suite name to default parameters and a
check function, so new statements can be added without touching the CLI.

Instance handling.  Exhaustive ranges enumerate generator matrices as RREF
representatives of row spaces.  Codes whose generator columns span the same
literal F_q-subspace U are translates of each other by a GL(n, q) column
map, so every invariant this package computes (weight profiles by either
algorithm, dual profiles, intersection maxima, defects) coincides for them;
the expensive analysis therefore runs once per distinct subspace and is
shared, while the per-code loop still visits, validates and classifies every
code.  Representative independence is itself one of the tested properties.

Where a statement equates a geometric quantity with a weight condition, the
weight side is evaluated with the Galois-closure algorithm and the geometric
side with the subspace scan, so the two sides of every equivalence come from
independent computations.

Wei-type duality and the dual-weight clauses are only asserted when the dual
code is nondegenerate, matching the stated scope of those results; instances
skipped for that reason are counted in the reports.
"""

from __future__ import annotations

import math
import random
from typing import Callable, Iterator

from . import classify
from .classify import (gen_weight_bound, is_mrd, is_near_mrd,
                       near_mrd_length_bound, near_mrd_length_bound_raw,
                       quasi_mrd_link_condition, rank_defect, singleton_max_d)
from .codes import (RankMetricCode, WeightProfile, dual,
                    generalized_weights_galois, generalized_weights_geometric,
                    hyperplane_of_functional, is_nondegenerate,
                    min_rank_distance, new_code, rank_weight)
from .constructions import gabidulin, near_mrd_system, pseudoregulus_system
from .documents import code_to_json
from .errors import BudgetError, DomainError
from .fields import FieldTower, make_tower
from .linalg import Echelon, Mat, _rref_rows, enumerate_subspaces, vec_mat
from .qsystems import (QSystem, evasive_scan, hyperplane_spectrum,
                       intersection_dim, phi, psi)


# ---------------------------------------------------------------------------
# shared instance analysis, cached per literal system subspace
# ---------------------------------------------------------------------------

_ANALYSIS_CACHE: dict = {}


def clear_caches() -> None:
    """Drop all memoized analyses (also clears the profile caches)."""
    from . import codes
    _ANALYSIS_CACHE.clear()
    codes.clear_caches()


def _gf2_rref_key(rows: list[int]) -> tuple[int, ...]:
    """Canonical reduced form of a set of bit-packed F_2 rows."""
    ech: dict[int, int] = {}
    for v in rows:
        while v:
            p = v.bit_length() - 1
            if p in ech:
                v ^= ech[p]
            else:
                ech[p] = v
                break
    for p in sorted(ech, reverse=True):
        for pp in list(ech):
            if pp != p and (ech[pp] >> p) & 1:
                ech[pp] ^= ech[p]
    return tuple(sorted(ech.values(), reverse=True))


def _system_key_of_generator(tower: FieldTower, G: Mat):
    """(nondegenerate?, canonical key of the column-span subspace).

    Fast path for q = 2 packs the flattened columns into machine integers.
    """
    n = G.ncols
    m = tower.m
    if tower.q == 2 and tower.e == 1:
        cols = []
        for j in range(n):
            v = 0
            for i in range(G.nrows):
                v |= G.rows[i][j] << (i * m)
            cols.append(v)
        key = _gf2_rref_key(cols)
        return len(key) == n, key
    ech = Echelon(tower.base, m * G.nrows)
    for j in range(n):
        ech.insert_vec(tower.flatten(G.col(j)))
    if ech.dim != n:
        return False, None
    rows, _ = _rref_rows(tower.base,
                         [list(tower.flatten(G.col(j))) for j in range(n)])
    return True, tuple(tuple(r) for r in rows)


def analyze_code(C: RankMetricCode, budget: int | None = None) -> dict:
    """All invariants a suite may need, memoized per system subspace."""
    nondeg, key = _system_key_of_generator(C.tower, C.G)
    if not nondeg:
        raise DomainError("analysis is defined for nondegenerate codes")
    full_key = (C.tower.key(), C.n, C.k, key)
    hit = _ANALYSIS_CACHE.get(full_key)
    if hit is not None:
        return hit
    tower = C.tower
    n, k, m = C.n, C.k, tower.m
    U = phi(C)
    maxes = tuple(evasive_scan(U, h, budget=budget).intersection_dim
                  for h in range(k))
    prof_geom = tuple(generalized_weights_geometric(C, budget=budget))
    prof_gal = tuple(generalized_weights_galois(C, budget=budget))
    d = min_rank_distance(C, budget=budget)
    ana = {
        "n": n, "k": k, "m": m, "q": tower.q,
        "d": d,
        "profile_geom": prof_geom,
        "profile_galois": prof_gal,
        "evasive_max": maxes,
        "defect": rank_defect(C, budget=budget),
    }
    if k < n:
        Cd = dual(C)
        dual_nondeg = is_nondegenerate(Cd)[0]
        ana["dual_d"] = min_rank_distance(Cd, budget=budget)
        ana["dual_nondegenerate"] = dual_nondeg
        ana["dual_defect"] = rank_defect(Cd, budget=budget)
        if dual_nondeg:
            ana["dual_profile_geom"] = tuple(
                generalized_weights_geometric(Cd, budget=budget))
            ana["dual_profile_galois"] = tuple(
                generalized_weights_galois(Cd, budget=budget))
    _ANALYSIS_CACHE[full_key] = ana
    return ana


def iter_codes(tower: FieldTower, n: int, k: int,
               budget: int | None = None) -> Iterator[RankMetricCode]:
    """All [n,k] codes over the tower, one RREF generator per row space."""
    for G in enumerate_subspaces(n, k, tower.ext, budget=budget):
        yield RankMetricCode(tower, G)


def iter_nondegenerate_codes(tower: FieldTower, n: int, k: int,
                             budget: int | None = None):
    """Nondegenerate codes with their cached analyses (fast degeneracy
    filter on the packed column span).

    Yields (code-or-factory, analysis): on an analysis-cache hit the first
    element is a zero-argument factory building the code on demand, so the
    hot loop does not pay for code construction; ``_Run.check`` resolves
    factories only when serializing a counterexample.
    """
    tkey = tower.key()
    for G in enumerate_subspaces(n, k, tower.ext, budget=budget):
        nondeg, key = _system_key_of_generator(tower, G)
        if not nondeg:
            continue
        full_key = (tkey, n, k, key)
        ana = _ANALYSIS_CACHE.get(full_key)
        if ana is None:
            C = RankMetricCode.from_rref(tower, G)
            ana = analyze_code(C, budget=budget)
            yield C, ana
        else:
            yield (lambda G=G: RankMetricCode.from_rref(tower, G)), ana


def random_code(rng: random.Random, tower: FieldTower, n: int, k: int,
                require_nondegenerate: bool = True) -> RankMetricCode:
    """Seeded random code; resamples until the generator has full rank (and
    the code is nondegenerate when asked for)."""
    Q = tower.order
    while True:
        rows = [[rng.randrange(Q) for _ in range(n)] for _ in range(k)]
        try:
            C = new_code(tower, Mat(tower.ext, rows))
        except DomainError:
            continue
        if require_nondegenerate and not is_nondegenerate(C)[0]:
            continue
        return C


def random_instances(seed: int, count: int, qs=(2, 3), m_max=4, n_max=6,
                     k_max=3) -> list[RankMetricCode]:
    """The seeded random instance pool shared by several suites."""
    rng = random.Random(seed)
    towers: dict = {}
    out = []
    while len(out) < count:
        q = rng.choice(list(qs))
        m = rng.randrange(1, m_max + 1)
        n = rng.randrange(1, n_max + 1)
        k = rng.randrange(1, min(n, k_max) + 1)
        if n > m * k:  # no nondegenerate code fits: column span too small
            continue
        key = (q, m)
        if key not in towers:
            towers[key] = make_tower(q, 1, m)
        out.append(random_code(rng, towers[key], n, k))
    return out


# ---------------------------------------------------------------------------
# suite plumbing
# ---------------------------------------------------------------------------

class _Run:
    """Mutable pass/fail accumulator for one suite execution."""

    def __init__(self, name: str, params: dict):
        self.name = name
        self.params = params
        self.instances = 0
        self.checks = 0
        self.skipped = 0
        self.failure_count = 0
        self.failures: list[dict] = []
        self.extra: dict = {}

    def check(self, ok: bool, C, detail: dict) -> None:
        self.checks += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < 8:  # first counterexamples, in full
                doc = {"detail": detail}
                if callable(C):
                    C = C()
                if C is not None:
                    doc["code"] = code_to_json(C)
                self.failures.append(doc)

    def report(self, complete: bool = True, **extra) -> dict:
        body = {
            "suite": self.name,
            "parameters": self.params,
            "instances": self.instances,
            "checks": self.checks,
            "skipped": self.skipped,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "passed": self.failure_count == 0 and complete,
            "complete": complete,
        }
        body.update(self.extra)
        body.update(extra)
        return body


def _exhaustive_params(params: dict) -> tuple[FieldTower, list[int], int]:
    tower = make_tower(params["q"], 1, params["m"])
    ns = params.get("ns") or list(range(params.get("n_min", 3),
                                        params.get("n_max", 5) + 1))
    return tower, list(ns), params["k"]


def _iter_exhaustive(run: _Run, params: dict, budget):
    tower, ns, k = _exhaustive_params(params)
    for n in ns:
        for C, ana in iter_nondegenerate_codes(tower, n, k, budget=budget):
            run.instances += 1
            yield C, ana


def _construction_pool(budget) -> list[RankMetricCode]:
    """Small constructed codes used by several suites."""
    out = []
    for m in (3, 4):
        t = make_tower(2, 1, m)
        for k in range(1, m + 1):
            for n in range(k, m + 1):
                out.append(gabidulin(t, n, k))
    for (q, m, k) in [(2, 3, 2), (2, 4, 3), (3, 3, 2)]:
        t = make_tower(q, 1, m)
        out.append(psi(near_mrd_system(t, k, verify=False)))
        out.append(psi(pseudoregulus_system(t, min(k, m), verify=False)))
    return out


# ---------------------------------------------------------------------------
# the suites
# ---------------------------------------------------------------------------

def _suite_prop_2_9(run: _Run, params: dict, budget) -> None:
    """Monotonicity of the weight hierarchy and the duality partition."""
    def check_one(C, ana):
        n, k = ana["n"], ana["k"]
        prof = ana["profile_geom"]
        mono = all(a < b for a, b in zip(prof, prof[1:])) and prof[-1] == n
        run.check(mono, C, {"profile": list(prof), "property": "monotone"})
        if ana.get("dual_nondegenerate"):
            dprof = ana["dual_profile_geom"]
            union = set(prof) | {n + 1 - w for w in dprof}
            ok = union == set(range(1, n + 1)) and len(prof) + len(dprof) == n
            run.check(ok, C, {"profile": list(prof),
                              "dual_profile": list(dprof),
                              "property": "duality-partition"})
        elif ana["k"] < ana["n"]:
            run.skipped += 1

    for C, ana in _iter_exhaustive(run, params, budget):
        check_one(C, ana)
    for C in random_instances(params["seed"], params["count"]):
        run.instances += 1
        check_one(C, analyze_code(C, budget=budget))


def _suite_prop_2_10(run: _Run, params: dict, budget) -> None:
    """Generalized weights against their parameter bound."""
    def check_one(C, ana):
        n, k, m = ana["n"], ana["k"], ana["m"]
        for s in range(1, k + 1):
            bound = gen_weight_bound(n, k, m, s)
            w = ana["profile_galois"][s - 1]
            run.check(w <= bound, C, {"s": s, "weight": w, "bound": bound})

    for C, ana in _iter_exhaustive(run, params, budget):
        check_one(C, ana)
    for C in random_instances(params["seed"], params["count"]):
        run.instances += 1
        check_one(C, analyze_code(C, budget=budget))


def _suite_eq_2(run: _Run, params: dict, budget) -> None:
    """Codeword rank weight vs the hyperplane intersection identity."""
    rng = random.Random(params["seed"])
    pool = random_instances(params["seed"] + 1, params["codes"])
    per = max(1, params["pairs"] // len(pool))
    for C in pool:
        run.instances += 1
        U = phi(C)
        tower = C.tower
        for _ in range(per):
            v = [rng.randrange(tower.order) for _ in range(C.k)]
            if not any(v):
                v[0] = 1
            lhs = rank_weight(tower, vec_mat(v, C.G))
            H = hyperplane_of_functional(tower, v)
            rhs = C.n - intersection_dim(U, H)
            run.check(lhs == rhs, C,
                      {"message": list(v), "rank_weight": lhs,
                       "n_minus_intersection": rhs})


def _clauses_3_3(ana: dict, h: int, r: int):
    """The three statements of the evasive <-> weights correspondence.

    Returns (evasive, weight-clause, dual-clause-or-None); the weight side
    uses the Galois-algorithm profile so the comparison crosses two
    independent computations.
    """
    n, k = ana["n"], ana["k"]
    evasive = r >= h and ana["evasive_max"][h] <= r
    c2 = ana["profile_galois"][k - h - 1] >= n - r
    c3 = None
    if ana.get("dual_nondegenerate") and 1 <= r - h + 1 <= n - k:
        c3 = ana["dual_profile_galois"][r - h] >= r + 2
    return evasive, c2, c3


def _suite_theorem_3_3(run: _Run, params: dict, budget) -> None:
    """Three-way equivalence of evasiveness, code weights and dual weights,
    plus the sharp case."""
    distinct = set()
    for C, ana in _iter_exhaustive(run, params, budget):
        distinct.add(id(ana))
        run.extra["distinct_systems"] = len(distinct)
        n, k = ana["n"], ana["k"]
        for h in range(k):
            for r in range(0, n + 1):
                ev, c2, c3 = _clauses_3_3(ana, h, r)
                run.check(ev == c2, C,
                          {"h": h, "r": r, "evasive": ev, "weights": c2,
                           "evasive_max": list(ana["evasive_max"]),
                           "profile_galois": list(ana["profile_galois"])})
                if c3 is not None:
                    run.check(ev == c3, C,
                              {"h": h, "r": r, "evasive": ev, "dual": c3})
                elif 1 <= r - h + 1 <= n - k:
                    run.skipped += 1
                # sharp case: equality iff evasive but not (h, r-1)-evasive
                sharp_lhs = ana["profile_galois"][k - h - 1] == n - r
                prev = r - 1 >= h and ana["evasive_max"][h] <= r - 1
                run.check(sharp_lhs == (ev and not prev), C,
                          {"h": h, "r": r, "sharp": sharp_lhs,
                           "evasive": ev, "evasive_prev": prev})


def _suite_cor_4_4(run: _Run, params: dict, budget) -> None:
    """h-scattered systems never exceed the dimension bound."""
    def check_one(C, ana):
        k, m, n = ana["k"], ana["m"], ana["n"]
        for h in range(k):
            if ana["evasive_max"][h] <= h:
                bound = classify.scattered_dim_bound(k, m, h)
                run.check(n <= bound, C, {"h": h, "n": n, "bound": bound})

    for C, ana in _iter_exhaustive(run, params, budget):
        check_one(C, ana)
    for C in _construction_pool(budget):
        run.instances += 1
        check_one(C, analyze_code(C, budget=budget))


def _suite_cor_4_11(run: _Run, params: dict, budget) -> None:
    """Hyperplane spectrum window for maximum scattered systems built from
    evaluation codes with n = m."""
    for m in params["ms"]:
        tower = make_tower(params["q"], 1, m)
        for k in range(1, m + 1):
            C = gabidulin(tower, m, k)
            run.instances += 1
            U = phi(C)
            spec = hyperplane_spectrum(U, budget=budget)
            h = k - 1
            lo = (k * m) // (h + 1) - m
            hi = lo + h
            ok = all(lo <= x <= hi for x in spec)
            run.check(ok, C, {"spectrum": sorted(set(spec)),
                              "window": [lo, hi]})


def _suite_theorem_4_10(run: _Run, params: dict, budget) -> None:
    """Maximum h-scattered <-> MRD, whenever h+1 divides km and n is at the
    bound."""
    def check_one(C, ana):
        n, k, m = ana["n"], ana["k"], ana["m"]
        for h in range(k):
            if (k * m) % (h + 1) == 0 and n == (k * m) // (h + 1):
                scattered = ana["evasive_max"][h] <= h
                d = ana["d"]
                mrd = m * k == min(m * (n - d + 1), n * (m - d + 1))
                run.check(scattered == mrd, C,
                          {"h": h, "scattered": scattered, "mrd": mrd,
                           "d": d})

    for C, ana in _iter_exhaustive(run, params, budget):
        check_one(C, ana)
    for C in _construction_pool(budget):
        run.instances += 1
        check_one(C, analyze_code(C, budget=budget))


def _prop_5_3_sides(ana: dict):
    n, k = ana["n"], ana["k"]
    prof = ana["profile_galois"]
    crit1 = prof[0] == n - k and (k < 2 or prof[1] == n - k + 2)
    crit2 = ana["d"] + ana["dual_d"] == n
    sides = [crit1, crit2]
    if k >= 2:
        mx = ana["evasive_max"]
        crit3 = (mx[k - 2] <= k - 2
                 and not mx[k - 1] <= k - 1
                 and mx[k - 1] <= k)
        sides.append(crit3)
    return sides


def _suite_prop_5_3(run: _Run, params: dict, budget) -> None:
    """Agreement of the three near MRD characterizations."""
    for C, ana in _iter_exhaustive(run, params, budget):
        if ana["k"] == ana["n"]:
            continue
        sides = _prop_5_3_sides(ana)
        run.check(len(set(sides)) == 1, C, {"criteria": sides})
    for (q, m, k) in params["constructions"]:
        tower = make_tower(q, 1, m)
        C = psi(near_mrd_system(tower, k, verify=False))
        run.instances += 1
        flag, details = is_near_mrd(C, budget=budget)  # consistency inside
        run.check(flag, C, {"is_near_mrd": flag, "details": str(details)})


def _suite_theorem_5_6(run: _Run, params: dict, budget) -> None:
    """Every code classified near MRD fits the length bound, and the clean
    bound never exceeds the coarse one."""
    for k in range(1, 7):
        for m in range(1, 9):
            clean = near_mrd_length_bound(k, m)
            if clean is not None:
                run.check(clean <= near_mrd_length_bound_raw(k, m), None,
                          {"k": k, "m": m, "clean": clean})
    def check_one(C, ana):
        if ana["k"] == ana["n"] or ana["k"] < 2:
            return
        sides = _prop_5_3_sides(ana)
        if sides[0]:
            n, k, m = ana["n"], ana["k"], ana["m"]
            bound = near_mrd_length_bound(k, m)
            run.check(m >= k and bound is not None and n <= bound, C,
                      {"n": n, "bound": bound})

    for C, ana in _iter_exhaustive(run, params, budget):
        check_one(C, ana)
    for (q, m, k) in params["constructions"]:
        tower = make_tower(q, 1, m)
        C = psi(near_mrd_system(tower, k, verify=False))
        run.instances += 1
        check_one(C, analyze_code(C, budget=budget))


def _suite_def_6_1(run: _Run, params: dict, budget) -> None:
    """Defect nonnegativity and arithmetic, the quasi-MRD flag, and the
    link-condition value for (k, m, h) = (3, 5, 1)."""
    def check_one(C, ana):
        n, k, m, d = ana["n"], ana["k"], ana["m"], ana["d"]
        expected = m - math.ceil(k * m / n) - d + 1
        run.check(ana["defect"] == expected and ana["defect"] >= 0, C,
                  {"defect": ana["defect"], "recomputed": expected})

    for C, ana in _iter_exhaustive(run, params, budget):
        check_one(C, ana)
    for C in _construction_pool(budget):
        run.instances += 1
        check_one(C, analyze_code(C, budget=budget))
    run.check(quasi_mrd_link_condition(3, 5, 1) == -6, None,
              {"k": 3, "m": 5, "h": 1,
               "value": quasi_mrd_link_condition(3, 5, 1)})


def _suite_theorem_6_3(run: _Run, params: dict, budget) -> None:
    """h-scattered <-> dual defect bound (dual nondegenerate, or h = 0)."""
    def check_one(C, ana):
        n, k, m = ana["n"], ana["k"], ana["m"]
        if k >= n:
            return
        for h in range(k):
            if h >= 1 and not ana.get("dual_nondegenerate"):
                run.skipped += 1
                continue
            scattered = ana["evasive_max"][h] <= h
            rhs = ana["dual_defect"] <= (k * m) // n - h - 1
            run.check(scattered == rhs, C,
                      {"h": h, "scattered": scattered,
                       "dual_defect": ana["dual_defect"]})

    for C, ana in _iter_exhaustive(run, params, budget):
        check_one(C, ana)
    for C in _construction_pool(budget):
        run.instances += 1
        check_one(C, analyze_code(C, budget=budget))


def _suite_theorem_6_6(run: _Run, params: dict, budget) -> None:
    """Quasi-maximum h-scattered <-> dual quasi-MRD under the link
    condition."""
    def check_one(C, ana):
        n, k, m = ana["n"], ana["k"], ana["m"]
        if k >= n:
            return
        for h in range(k):
            if n != (k * m) // (h + 1):
                continue
            if quasi_mrd_link_condition(k, m, h) >= 0:
                continue
            if h >= 1 and not ana.get("dual_nondegenerate"):
                run.skipped += 1
                continue
            quasi_max = ana["evasive_max"][h] <= h
            dual_quasi = ana["dual_defect"] == 0
            run.check(quasi_max == dual_quasi, C,
                      {"h": h, "quasi_maximum": quasi_max,
                       "dual_quasi_mrd": dual_quasi})

    for C, ana in _iter_exhaustive(run, params, budget):
        check_one(C, ana)
    for C in _construction_pool(budget):
        run.instances += 1
        check_one(C, analyze_code(C, budget=budget))


_EXH = {"q": 2, "m": 3, "k": 2, "n_min": 3, "n_max": 5}
_RAND = {"seed": 2024, "count": 40}
_NEAR = {"constructions": [[2, 3, 2], [2, 3, 3], [2, 4, 3], [2, 4, 4],
                           [3, 3, 2], [2, 5, 3]]}

SUITES: dict[str, tuple[dict, Callable]] = {
    "prop-2.9": ({**_EXH, **_RAND}, _suite_prop_2_9),
    "prop-2.10": ({**_EXH, **_RAND}, _suite_prop_2_10),
    "eq-2": ({"seed": 7, "codes": 40, "pairs": 200}, _suite_eq_2),
    "theorem-3.3": (dict(_EXH), _suite_theorem_3_3),
    "cor-4.4": (dict(_EXH), _suite_cor_4_4),
    "cor-4.11": ({"q": 2, "ms": [3, 4]}, _suite_cor_4_11),
    "theorem-4.10": (dict(_EXH), _suite_theorem_4_10),
    "prop-5.3": ({**_EXH, **_NEAR}, _suite_prop_5_3),
    "theorem-5.6": ({**_EXH, **_NEAR}, _suite_theorem_5_6),
    "def-6.1": (dict(_EXH), _suite_def_6_1),
    "theorem-6.3": (dict(_EXH), _suite_theorem_6_3),
    "theorem-6.6": (dict(_EXH), _suite_theorem_6_6),
}


def run_suite(name: str, params: dict | None = None,
              budget: int | None = None) -> dict:
    """Execute one named suite and return its report document.

    A budget overflow inside the range produces a partial report flagged
    incomplete instead of a hard failure.
    """
    if name not in SUITES:
        raise DomainError(
            f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    defaults, fn = SUITES[name]
    resolved = dict(defaults)
    resolved.update(params or {})
    run = _Run(name, resolved)
    try:
        fn(run, resolved, budget)
    except BudgetError as exc:
        return run.report(complete=False, budget_error=str(exc))
    return run.report()
