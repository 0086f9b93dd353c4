"""Explicit code and system constructions, plus a budgeted scattered search.

The evaluation-point family (``gabidulin``) gives MRD codes for n <= m; its
n = m instance spans a maximum (k-1)-scattered system.  The pseudoregulus
system {(a, a^q, ..., a^(q^(k-1)))} is (k-1)-scattered; extending it by the
direction vector (1, 0, ..., 0) yields an [m+1, k] system whose code is near
MRD, the longest possible for m != 2k-2.  Direct sums give long MRD codes
for n > m.  ``search_scattered`` is an existence probe at tiny parameters:
exhaustive over canonical subspace representatives, or seeded random
sampling.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
import random

from .classify import is_near_mrd, scattered_dim_bound
from .codes import RankMetricCode, new_code
from .errors import BudgetError, DomainError
from .fields import FieldTower
from .linalg import (DEFAULT_BUDGET, Echelon, Mat, enumerate_subspaces,
                     fq_span_dim, gaussian_binomial)
from .qsystems import QSystem, is_evasive, is_h_scattered, psi


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for ``search_scattered``; random mode is reproducible
    from the seed."""

    max_candidates: int = DEFAULT_BUDGET
    max_seconds: float = 300.0
    mode: str = "exhaustive"
    seed: int = 0

    def __post_init__(self):
        if self.max_candidates < 1 or self.max_seconds <= 0:
            raise DomainError("search budget limits must be positive")
        if self.mode not in ("exhaustive", "random"):
            raise DomainError(f"unknown search mode {self.mode!r}")


def _power_basis(tower: FieldTower, length: int) -> list[int]:
    """1, g, g^2, ... in F_{q^m} (g = the class of x in the modulus basis)."""
    if length > tower.m:
        raise DomainError("power basis longer than the extension degree")
    g = tower.ext_from_coeffs((0, 1) + (0,) * (tower.m - 2)) \
        if tower.m >= 2 else 1
    out = [1]
    for _ in range(length - 1):
        out.append(tower.ext.mul(out[-1], g))
    return out


def gabidulin(tower: FieldTower, n: int, k: int,
              points: list[int] | None = None) -> RankMetricCode:
    """Evaluation code with G[i][j] = p_j^(q^i) on F_q-independent points.

    Defaults to the power-basis points 1, g, ..., g^(n-1).  The result is
    MRD with d = n - k + 1; for n = m its system is maximum (k-1)-scattered.
    """
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > tower.m:
        raise DomainError(f"need n <= m, got n={n}, m={tower.m}")
    if points is None:
        points = _power_basis(tower, n)
    if len(points) != n:
        raise DomainError(f"need {n} evaluation points, got {len(points)}")
    if fq_span_dim(tower, [(x,) for x in points]) != n:
        raise DomainError("evaluation points are F_q-dependent")
    rows = []
    cur = list(points)
    for _ in range(k):
        rows.append(tuple(cur))
        cur = [tower.frobenius(x, 1) for x in cur]
    return new_code(tower, Mat(tower.ext, rows))


def pseudoregulus_system(tower: FieldTower, k: int,
                         verify: bool = True,
                         budget: int | None = None) -> QSystem:
    """The [m,k] system spanned by (b_i, b_i^q, ..., b_i^(q^(k-1))) over an
    F_q-basis b_i of F_{q^m}; (k-1)-scattered, verified at construction when
    the enumeration budget allows."""
    if k < 1:
        raise DomainError("need k >= 1")
    if k > tower.m:
        raise DomainError(
            f"need k <= m, got k={k}, m={tower.m}: no (k-1)-scattered "
            f"system exists with m < k + 1")
    rows = []
    for b in _power_basis(tower, tower.m):
        row = [b]
        for _ in range(k - 1):
            row.append(tower.frobenius(row[-1], 1))
        rows.append(tuple(row))
    U = QSystem(tower, Mat(tower.ext, rows))
    if verify and k >= 2:
        limit = DEFAULT_BUDGET if budget is None else budget
        if gaussian_binomial(k, k - 1, tower.order) <= limit:
            assert is_h_scattered(U, k - 1, budget=budget)
    return U


def near_mrd_system(tower: FieldTower, k: int,
                    verify: bool = True,
                    budget: int | None = None) -> QSystem:
    """The [m+1,k] system {(a + t, a^q, ..., a^(q^(k-1)))}: the direction
    vector (1, 0, ..., 0) followed by the pseudoregulus rows.

    Its code is near MRD; construction requires m >= k >= 2.  The basis
    ordering matches the worked example for (q, m, k) = (2, 4, 3) verbatim.
    """
    if k < 2:
        raise DomainError("need k >= 2")
    if tower.m < k:
        raise DomainError(
            f"no near MRD code exists for m = {tower.m} < k = {k}")
    rows = [(1,) + (0,) * (k - 1)]
    rows.extend(pseudoregulus_system(tower, k, verify=False).basis.rows)
    U = QSystem(tower, Mat(tower.ext, rows))
    if verify:
        limit = DEFAULT_BUDGET if budget is None else budget
        worst = max(gaussian_binomial(k, t, tower.order)
                    for t in range(k))
        if worst <= limit:
            flag, _ = is_near_mrd(psi(U), budget=budget)
            assert flag
    return U


def direct_sum(codes: list[RankMetricCode]) -> RankMetricCode:
    """Block-diagonal generator; n and k add, d is the min of the parts."""
    if not codes:
        raise DomainError("direct sum of nothing")
    tower = codes[0].tower
    for C in codes[1:]:
        if C.tower != tower:
            raise DomainError("direct sum requires a common tower")
    n = sum(C.n for C in codes)
    rows = []
    offset = 0
    for C in codes:
        for r in C.G.rows:
            rows.append((0,) * offset + tuple(r) + (0,) * (n - offset - C.n))
        offset += C.n
    return new_code(tower, Mat(tower.ext, rows))


def _full_ext_span(tower: FieldTower, rows) -> bool:
    ech = Echelon(tower.ext, len(rows[0]))
    ech.insert_all(rows)
    return ech.dim == len(rows[0])


def search_scattered(tower: FieldTower, k: int, h: int, n: int,
                     budget: SearchBudget | None = None) -> QSystem | None:
    """Look for an h-scattered [n,k] system of F_q-dimension n.

    Instances above the dimension bound floor(km/(h+1)) return None without
    any search; so does m < h + 2 for proper systems (n > k), where no
    h-scattered system exists.  Exhaustive mode scans canonical
    representatives (RREF order over the flattened ambient space) and
    distinguishes a completed scan (None) from budget exhaustion
    (BudgetError).  Any hit is re-verified before being returned.
    """
    if budget is None:
        budget = SearchBudget()
    if not 0 <= h < k:
        raise DomainError(f"need 0 <= h < k, got h={h}, k={k}")
    if n < k:
        return None  # cannot span F_{q^m}^k
    if n > scattered_dim_bound(k, tower.m, h):
        return None
    if tower.m < h + 2 and n > k:
        # no proper h-scattered system this low in the tower; at n = k the
        # rational subspace is a counterexample, so fall through to a search
        return None

    deadline = time.monotonic() + budget.max_seconds

    def check(rows) -> QSystem | None:
        if fq_span_dim(tower, rows) != n:
            return None
        if not _full_ext_span(tower, rows):
            return None
        U = QSystem(tower, Mat(tower.ext, rows))
        if not is_evasive(U, h, h)[0]:  # short-circuit scan
            return None
        # re-verify with the full witness-bearing scan before returning
        ok, w = is_evasive(U, h, h, witness=True)
        assert ok and w is not None and w.intersection_dim <= h
        return U

    if budget.mode == "exhaustive":
        total = gaussian_binomial(tower.m * k, n, tower.q)
        it = enumerate_subspaces(tower.m * k, n, tower.base,
                                 budget=max(total, 1))
        seen = 0
        for B in it:
            if seen >= budget.max_candidates or time.monotonic() > deadline:
                raise BudgetError(
                    f"exhaustive scattered search stopped after {seen} of "
                    f"{total} candidates; no conclusion")
            seen += 1
            rows = [tower.unflatten(r) for r in B.rows]
            hit = check(rows)
            if hit is not None:
                return hit
        return None

    rng = random.Random(budget.seed)
    Q = tower.order
    for _ in range(budget.max_candidates):
        if time.monotonic() > deadline:
            return None
        rows = [tuple(rng.randrange(Q) for _ in range(k)) for _ in range(n)]
        hit = check(rows)
        if hit is not None:
            return hit
    return None
