"""q-systems and the code <-> geometry dictionary.

An [n,k] q-system is an n-dimensional F_q-subspace U of F_{q^m}^k whose
F_{q^m}-span is the whole space.  ``phi`` sends a nondegenerate code to the
system spanned by its generator columns, ``psi`` sends a system basis back to
a generator matrix; the two are mutually inverse at the level of equivalence
classes, and every exported quantity (intersection spectra, evasiveness,
weights of the associated code) is a class function.  The package never
decides equivalence of two systems; it guarantees only that invariant
outputs do not depend on the chosen representative, which the test suite
checks by re-deriving them from different bases of the same subspace.

Evasiveness: U is (h,r)-evasive when every h-dimensional F_{q^m}-subspace
meets U in F_q-dimension at most r; (h,h)-evasive systems are h-scattered.
The scan over subspaces short-circuits on the first violation by default;
the witness-bearing mode completes the scan and reports a subspace attaining
the maximum intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codes import (RankMetricCode, dual, intersection_dim_with_ext_subspace,
                    min_rank_distance, projective_points,
                    hyperplane_of_functional, system_echelon)
from .errors import DomainError
from .fields import FieldTower
from .linalg import (Echelon, Mat, enumerate_subspaces, fq_span_dim, rref)


@dataclass(frozen=True)
class EvasiveWitness:
    """A subspace W together with dim_{F_q}(U cap W), recomputable from the
    stored fields."""

    W: Mat
    intersection_dim: int


class QSystem:
    """An [n,k] system: the rows of ``basis`` are an F_q-basis of U."""

    __slots__ = ("tower", "basis", "n", "k", "_ech", "_key")

    def __init__(self, tower: FieldTower, basis: Mat | Sequence[Sequence[int]]):
        if not isinstance(basis, Mat):
            basis = Mat(tower.ext, basis)
        if basis.field.order != tower.ext.order:
            raise DomainError("basis entries live in the wrong field")
        n, k = basis.nrows, basis.ncols
        if n < 1 or k < 1:
            raise DomainError("a q-system needs n >= 1 and k >= 1")
        dim = fq_span_dim(tower, basis.rows)
        if dim != n:
            raise DomainError(
                f"rows are not F_q-independent: span dimension {dim} < {n}")
        ech = Echelon(tower.ext, k)
        ech.insert_all(basis.rows)
        if ech.dim != k:
            raise DomainError(
                f"rows span an F_{{q^m}}-subspace of dimension {ech.dim} < k "
                f"= {k}; not a q-system")
        self.tower = tower
        self.basis = basis
        self.n = n
        self.k = k
        self._ech = system_echelon(tower, basis.rows)
        flat = Mat(tower.base, [tower.flatten(r) for r in basis.rows])
        self._key = (tower.key(), rref(flat)[0].rows, k)

    def canonical_key(self) -> tuple:
        """Identifies U as a subspace: RREF of the flattened basis."""
        return self._key

    def same_subspace(self, other: "QSystem") -> bool:
        return self._key == other._key

    def flat_echelon(self) -> Echelon:
        return self._ech

    def __repr__(self):
        return (f"QSystem([{self.n},{self.k}]_"
                f"{{{self.tower.q}^{self.tower.m}/{self.tower.q}}})")


def phi(C: RankMetricCode) -> QSystem:
    """System spanned by the generator columns of a nondegenerate code.

    The representative depends on the stored generator; all invariant
    outputs are independent of that choice.
    """
    from .codes import is_nondegenerate
    ok, why = is_nondegenerate(C)
    if not ok:
        raise DomainError(
            f"phi requires a nondegenerate code ({why}); the columns do not "
            f"form a basis of an [n,k] system")
    return QSystem(C.tower, Mat(C.tower.ext, C.columns()))


def psi(U: QSystem) -> RankMetricCode:
    """Code whose generator columns are the basis rows of U."""
    return RankMetricCode(U.tower, U.basis.transpose())


def intersection_dim(U: QSystem, W: Mat | Sequence[Sequence[int]]) -> int:
    """dim over F_q of U cap W for an F_{q^m}-subspace W of F_{q^m}^k."""
    if not isinstance(W, Mat):
        W = Mat(U.tower.ext, W, ncols=U.k)
    if W.ncols != U.k:
        raise DomainError(
            f"ambient mismatch: W lives in dimension {W.ncols}, U in {U.k}")
    return intersection_dim_with_ext_subspace(U.tower, U._ech, W.rows)


def evasive_scan(U: QSystem, h: int, stop_above: int | None = None,
                 budget: int | None = None) -> EvasiveWitness:
    """Maximum of dim(U cap W) over the h-dimensional subspaces W.

    With ``stop_above`` set, the scan returns early on the first W whose
    intersection exceeds it (short-circuit mode); the returned witness then
    certifies the violation rather than the global maximum.  The scan is a
    pure reduction by max over a canonical enumeration, so partitioning it
    across workers cannot change the result.
    """
    if not 0 <= h < U.k:
        raise DomainError(f"need 0 <= h < k, got h={h}, k={U.k}")
    tower = U.tower
    best = -1
    best_W = None
    cap = min(U.n, tower.m * h)
    for W in enumerate_subspaces(U.k, h, tower.ext, budget=budget):
        d = intersection_dim_with_ext_subspace(tower, U._ech, W.rows)
        if d > best:
            best, best_W = d, W
            if stop_above is not None and best > stop_above:
                break
            if best == cap:
                break
    assert best_W is not None
    return EvasiveWitness(best_W, best)


def is_evasive(U: QSystem, h: int, r: int, witness: bool = False,
               budget: int | None = None) -> tuple[bool, EvasiveWitness | None]:
    """Whether every h-dimensional F_{q^m}-subspace meets U in dimension
    at most r, together with a witness subspace.

    For r < h no (h,r)-evasive system exists and the answer is False with no
    witness.  By default the scan short-circuits on the first violating
    subspace; with ``witness=True`` it completes and the witness attains the
    maximal intersection.
    """
    if r < h:
        return False, None
    w = evasive_scan(U, h, stop_above=None if witness else r, budget=budget)
    return w.intersection_dim <= r, w


def is_h_scattered(U: QSystem, h: int, budget: int | None = None) -> bool:
    """(h,h)-evasive; h = 1 is the classical scattered property."""
    return is_evasive(U, h, h, budget=budget)[0]


def hyperplane_spectrum(U: QSystem, budget: int | None = None) -> tuple[int, ...]:
    """Sorted multiset of dim(U cap H) over all F_{q^m}-hyperplanes H.

    Its maximum is n minus the minimum rank distance of psi(U).  For k = 1
    the only hyperplane is the zero subspace and the spectrum is (0,).
    """
    tower = U.tower
    if U.k == 1:
        return (0,)
    out = []
    for v in projective_points(tower, U.k):
        H = hyperplane_of_functional(tower, v)
        out.append(intersection_dim_with_ext_subspace(tower, U._ech, H.rows))
    return tuple(sorted(out))


def rank_metric_dual(U: QSystem, budget: int | None = None) -> QSystem:
    """The rank-metric dual system phi(dual(psi(U))).

    Requires k < n and minimum distance d(psi(U)) >= 2 (which makes the dual
    code nondegenerate, so phi applies); psi(U) itself is nondegenerate by
    construction, and both directions are enforced.  The result is
    well-defined up to system equivalence: its invariant outputs do not
    depend on the representative choices made here.
    """
    if U.k >= U.n:
        raise DomainError("the dual system needs k < n")
    C = psi(U)
    d = min_rank_distance(C, budget=budget)
    if d < 2:
        raise DomainError(
            f"rank-metric dual requires minimum distance >= 2, got d = {d}; "
            f"the dual code would be degenerate")
    return phi(dual(C))
