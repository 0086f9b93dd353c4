"""Rank-metric codes as F_{q^m}-row spaces.

An [n,k] code is the row space of a full-row-rank k x n generator matrix
over F_{q^m}.  The rank weight of a codeword is the F_q-dimension of the
span of its coordinates; the minimum rank distance is computed through the
hyperplane picture (one subspace intersection per projective point of
F_{q^m}^k) rather than by walking q^(mk) codewords, with the codeword walk
kept as a brute-force oracle for small parameters.

Generalized rank weights come in two independent implementations:

* ``generalized_weights_geometric`` maximizes the intersection of the
  associated q-system with every F_{q^m}-subspace of each codimension;
* ``generalized_weights_galois`` minimizes the dimension of a Frobenius-stable
  subspace meeting the code in a prescribed dimension, enumerated through the
  F_q-rational subspaces of F_q^n that generate them.

The two must agree wherever both complete; the verification suites hold them
against each other.  Both are memoized per row space (cache keyed by the RREF
of the generator), separately, so the cross-check never collapses into one
computation checked against itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BudgetError, DomainError
from .fields import FieldTower
from .linalg import (DEFAULT_BUDGET, Echelon, Mat, enumerate_subspaces,
                     fq_span_dim, kernel, pack_gf2_row, rref, vec_mat)


@dataclass(frozen=True)
class WeightProfile:
    """The sequence (d_1, ..., d_k) of generalized rank weights."""

    weights: tuple[int, ...]

    def weight(self, s: int) -> int:
        """1-based accessor: weight(s) is the s-th generalized weight."""
        if not 1 <= s <= len(self.weights):
            raise DomainError(f"s = {s} outside 1..{len(self.weights)}")
        return self.weights[s - 1]

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)


class RankMetricCode:
    """An [n,k] rank-metric code given by a k x n generator over F_{q^m}.

    The generator is stored as given; its RREF is cached and used as the
    canonical key, so two codes with equal row spaces share memoized
    invariants.
    """

    __slots__ = ("tower", "G", "n", "k", "_rref", "_pivots", "_key")

    def __init__(self, tower: FieldTower, G: Mat | Sequence[Sequence[int]]):
        if not isinstance(G, Mat):
            G = Mat(tower.ext, G)
        if G.field.order != tower.ext.order:
            raise DomainError("generator entries live in the wrong field")
        if G.nrows < 1:
            raise DomainError("a code needs k >= 1")
        if G.nrows > G.ncols:
            raise DomainError(f"need k <= n, got k={G.nrows}, n={G.ncols}")
        R, rk, piv = rref(G)
        if rk != G.nrows:
            raise DomainError(
                f"generator is rank-deficient: rank {rk} < k = {G.nrows}")
        self._init_fields(tower, G, R, piv)

    def _init_fields(self, tower, G, R, piv):
        self.tower = tower
        self.G = G
        self.n = G.ncols
        self.k = G.nrows
        self._rref = R
        self._pivots = piv
        self._key = (tower.key(), R.rows, G.ncols)

    @classmethod
    def from_rref(cls, tower: FieldTower, G: Mat,
                  pivots: tuple[int, ...] | None = None) -> "RankMetricCode":
        """Fast path for generators already known to be in RREF (e.g. from
        the canonical subspace enumeration): skips re-reduction."""
        self = cls.__new__(cls)
        if pivots is None:
            pivots = tuple(next(j for j, x in enumerate(row) if x)
                           for row in G.rows)
        self._init_fields(tower, G, G, pivots)
        return self

    def key(self) -> tuple:
        return self._key

    def rref_generator(self) -> Mat:
        return self._rref

    def row_space_eq(self, other: "RankMetricCode") -> bool:
        return self._key == other._key

    def columns(self) -> list[tuple[int, ...]]:
        return [self.G.col(j) for j in range(self.n)]

    def __repr__(self):
        return (f"RankMetricCode([{self.n},{self.k}]_"
                f"{{{self.tower.q}^{self.tower.m}/{self.tower.q}}})")


@dataclass(frozen=True)
class ZeroCode:
    """Sentinel for the dual of a full code; never a rank-0 RankMetricCode."""

    tower: FieldTower
    n: int


def new_code(tower: FieldTower, G) -> RankMetricCode:
    return RankMetricCode(tower, G)


def rank_weight(tower: FieldTower, v: Sequence[int]) -> int:
    """dim over F_q of the span of the coordinates of v in F_{q^m}^n."""
    return fq_span_dim(tower, [(x,) for x in v])


# ---------------------------------------------------------------------------
# the hyperplane picture
# ---------------------------------------------------------------------------

def projective_points(tower: FieldTower, k: int) -> Iterator[tuple[int, ...]]:
    """Canonical representatives of the projective points of F_{q^m}^k:
    first nonzero coordinate normalized to 1."""
    Q = tower.order
    for p in range(k):
        head = (0,) * p + (1,)
        for tail in itertools.product(range(Q), repeat=k - 1 - p):
            yield head + tail


def hyperplane_of_functional(tower: FieldTower, v: Sequence[int]) -> Mat:
    """Basis of the hyperplane <v>^perp = {u : u . v = 0} in F_{q^m}^k."""
    if not any(v):
        raise DomainError("the zero functional has no hyperplane")
    return kernel(Mat(tower.ext, [v]))


def system_echelon(tower: FieldTower, vectors: Sequence[Sequence[int]]) -> Echelon:
    """Echelon of the flattened F_q-span of vectors in F_{q^m}^k."""
    width = tower.m * len(vectors[0])
    ech = Echelon(tower.base, width)
    if ech.packed:
        for r in vectors:
            ech.insert(pack_gf2_row(tower.flatten(r)))
    else:
        for r in vectors:
            ech.insert(tower.flatten(r))
    return ech


def _ext_basis_multiples(tower: FieldTower, w: Sequence[int]):
    """The m rows flatten(g^j * w), j = 0..m-1, spanning the F_q-flattening
    of the F_{q^m}-line through w."""
    ext = tower.ext
    lam = 1
    gamma = tower.ext_from_coeffs((0, 1) + (0,) * (tower.m - 2)) \
        if tower.m >= 2 else 1
    for _ in range(tower.m):
        yield tower.flatten([ext.mul(lam, x) for x in w])
        lam = ext.mul(lam, gamma)


def intersection_dim_with_ext_subspace(tower: FieldTower, ech: Echelon,
                                       W_rows: Sequence[Sequence[int]]) -> int:
    """dim_{F_q}(U cap W) where U is given by its flattened echelon and W by
    an F_{q^m}-basis.  The flattening of W has F_q-dimension m * dim(W), so
    dim(U cap W) = m*t - (rows of flat(W) independent from U)."""
    t = len(W_rows)
    if t == 0:
        return 0
    scratch = ech.copy()
    added = 0
    if scratch.packed:
        for w in W_rows:
            for row in _ext_basis_multiples(tower, w):
                if scratch.insert(pack_gf2_row(row)):
                    added += 1
    else:
        for w in W_rows:
            for row in _ext_basis_multiples(tower, w):
                if scratch.insert(row):
                    added += 1
    return tower.m * t - added


def min_rank_distance(C: RankMetricCode, budget: int | None = None) -> int:
    """Minimum rank weight of a nonzero codeword.

    Computed as dim_{F_q}(U) - max_H dim_{F_q}(U cap H) over the hyperplanes
    H of F_{q^m}^k, where U is the F_q-span of the generator columns.  Valid
    for degenerate codes as well (there dim U < n).
    """
    tower = C.tower
    n_points = (tower.order ** C.k - 1) // (tower.order - 1)
    limit = DEFAULT_BUDGET if budget is None else budget
    if n_points > limit:
        raise BudgetError(
            f"{n_points} hyperplanes exceed the budget {limit}")
    cols = C.columns()
    ech = system_echelon(tower, cols)
    dim_u = ech.dim
    best = 0
    cap = dim_u  # intersections cannot exceed dim U
    for v in projective_points(tower, C.k):
        H = hyperplane_of_functional(tower, v)
        d = intersection_dim_with_ext_subspace(tower, ech, H.rows)
        if d > best:
            best = d
            if best == cap:
                break
    return dim_u - best


def min_rank_distance_bruteforce(C: RankMetricCode) -> int:
    """Codeword-enumeration oracle; restricted to q^(mk) <= 2^16."""
    tower = C.tower
    if tower.order ** C.k > 1 << 16:
        raise DomainError("brute-force distance limited to q^(mk) <= 2^16")
    best = None
    for v in projective_points(tower, C.k):
        w = rank_weight(tower, vec_mat(v, C.G))
        if best is None or w < best:
            best = w
            if best == 1:
                break
    return best


def dual(C: RankMetricCode | ZeroCode) -> RankMetricCode | ZeroCode:
    """The dual code {v : c . v = 0 for all c in C}.

    For k = n the dual is the zero code, reported as a ZeroCode sentinel
    (whose own dual is the full code, restoring biduality).  The generator
    returned for k < n is the standard-form parity check built from the
    RREF of G (identity on the free columns), which is canonical for the
    row space.
    """
    if isinstance(C, ZeroCode):
        return RankMetricCode(C.tower, Mat.identity(C.tower.ext, C.n))
    if C.k == C.n:
        return ZeroCode(C.tower, C.n)
    H = kernel(C.rref_generator())
    return RankMetricCode(C.tower, H)


def is_nondegenerate(C: RankMetricCode) -> tuple[bool, str]:
    """True iff the F_q-span of the generator columns has dimension n.

    Equivalently (and verified in the test suite) the dual has minimum rank
    distance at least 2.
    """
    dim = fq_span_dim(C.tower, C.columns())
    if dim == C.n:
        return True, "column span has full dimension n"
    return False, f"column span has dimension {dim} < n = {C.n}"


def _require_nondegenerate(C: RankMetricCode, op: str) -> None:
    ok, why = is_nondegenerate(C)
    if not ok:
        raise DomainError(f"{op} requires a nondegenerate code; {why}")


# ---------------------------------------------------------------------------
# generalized rank weights, two independent algorithms
# ---------------------------------------------------------------------------

_GEOMETRIC_CACHE: dict = {}
_GALOIS_CACHE: dict = {}


def clear_caches() -> None:
    _GEOMETRIC_CACHE.clear()
    _GALOIS_CACHE.clear()


def generalized_weights_geometric(C: RankMetricCode,
                                  budget: int | None = None) -> WeightProfile:
    """Profile via the geometric characterization: the r-th weight is n
    minus the largest intersection of the column-span system with an
    F_{q^m}-subspace of codimension r."""
    cached = _GEOMETRIC_CACHE.get(C.key())
    if cached is not None:
        return cached
    _require_nondegenerate(C, "generalized_weights_geometric")
    tower = C.tower
    ech = system_echelon(tower, C.columns())
    n, k, m = C.n, C.k, tower.m
    weights = []
    for r in range(1, k + 1):
        t = k - r
        cap = min(n, m * t)
        best = 0
        for W in enumerate_subspaces(k, t, tower.ext, budget=budget):
            d = intersection_dim_with_ext_subspace(tower, ech, W.rows)
            if d > best:
                best = d
                if best == cap:
                    break
        weights.append(n - best)
    profile = WeightProfile(tuple(weights))
    _GEOMETRIC_CACHE[C.key()] = profile
    return profile


def generalized_weights_galois(C: RankMetricCode,
                               budget: int | None = None) -> WeightProfile:
    """Profile via Frobenius-stable subspaces: the s-th weight is the least
    dimension of a Galois-closed subspace of F_{q^m}^n meeting C in
    dimension >= s.

    Galois-closed subspaces are exactly the F_{q^m}-spans of F_q-rational
    subspaces, so the minimization runs over the subspaces of F_q^n in
    increasing dimension; F_q-element codes coincide with their lifts to
    F_{q^m}, so rational rows can be fed directly to the extension field
    elimination.
    """
    cached = _GALOIS_CACHE.get(C.key())
    if cached is not None:
        return cached
    _require_nondegenerate(C, "generalized_weights_galois")
    tower = C.tower
    n, k = C.n, C.k
    ext = tower.ext
    weights: list[int | None] = [None] * k
    found = 0
    g_rows = C.G.rows
    for a in range(1, n + 1):
        for B in enumerate_subspaces(n, a, tower.base, budget=budget):
            ech = Echelon(ext, n)
            ech.insert_all(B.rows)
            ech.insert_all(g_rows)
            t = a + k - ech.dim  # dim of the intersection with C
            for s in range(1, min(t, k) + 1):
                if weights[s - 1] is None:
                    weights[s - 1] = a
                    found += 1
            if found == k:
                break
        if found == k:
            break
    assert found == k
    profile = WeightProfile(tuple(weights))  # type: ignore[arg-type]
    _GALOIS_CACHE[C.key()] = profile
    return profile
