"""Systems: the phi/psi dictionary, evasiveness, spectra, rank-metric duals."""

import random

import pytest

from rankgeo.errors import DomainError
from rankgeo.fields import make_tower
from rankgeo.linalg import Mat
from rankgeo.codes import (dual, is_nondegenerate, min_rank_distance,
                           generalized_weights_geometric, new_code)
from rankgeo.qsystems import (EvasiveWitness, QSystem, hyperplane_spectrum,
                              intersection_dim, is_evasive, is_h_scattered,
                              phi, psi, rank_metric_dual)
from rankgeo.constructions import gabidulin, near_mrd_system

T8 = make_tower(2, 1, 3)
T16 = make_tower(2, 1, 4)
A, A2 = 2, 4

G215 = [[1, 0, A, 0], [0, 1, 0, A2]]
G310 = [[1, 0, A, A2, 1], [0, 1, 1, 0, A]]


def sys_215():
    return phi(new_code(T8, Mat(T8.ext, G215)))


def sys_310():
    return phi(new_code(T8, Mat(T8.ext, G310)))


def test_phi_takes_the_columns_as_basis_rows():
    U = sys_215()
    assert U.basis.rows == ((1, 0), (0, 1), (A, 0), (0, A2))
    assert (U.n, U.k) == (4, 2)


def test_phi_rejects_degenerate_codes():
    C = new_code(T8, Mat(T8.ext, [[1, 1]]))
    with pytest.raises(DomainError, match="nondegenerate"):
        phi(C)


def test_phi_of_full_code_is_the_standard_basis_span():
    C = new_code(T8, Mat.identity(T8.ext, 3))
    U = phi(C)
    assert U.basis.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_psi_inverts_phi_on_the_nose_for_stored_generators():
    C = new_code(T8, Mat(T8.ext, G215))
    assert psi(phi(C)).G.rows == C.G.rows


def test_psi_roundtrip_preserves_invariants():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randrange(2, 5)
        k = rng.randrange(1, n + 1)
        rows = [[rng.randrange(8) for _ in range(n)] for _ in range(k)]
        try:
            C = new_code(T8, Mat(T8.ext, rows))
        except DomainError:
            continue
        if not is_nondegenerate(C)[0]:
            continue
        C2 = psi(phi(C))
        assert min_rank_distance(C2) == min_rank_distance(C)
        assert (tuple(generalized_weights_geometric(C2))
                == tuple(generalized_weights_geometric(C)))


def test_intersection_dim_worked_example():
    U = sys_215()
    line = Mat(T8.ext, [[0, 1]])
    assert intersection_dim(U, line) == 2
    full = Mat.identity(T8.ext, 2)
    assert intersection_dim(U, full) == U.n
    zero = Mat(T8.ext, [], ncols=2)
    assert intersection_dim(U, zero) == 0
    with pytest.raises(DomainError, match="ambient"):
        intersection_dim(U, Mat(T8.ext, [[1, 0, 0]]))


def test_evasiveness_of_the_310_system_and_its_dual():
    U = sys_310()
    assert is_evasive(U, 1, 3)[0]
    assert not is_evasive(U, 1, 2)[0]
    Ud = rank_metric_dual(U)
    assert is_evasive(Ud, 1, 2)[0]
    assert is_evasive(Ud, 2, 3)[0]
    # (h, n)-evasive always holds: the intersection cannot exceed dim U
    assert is_evasive(U, 1, U.n)[0]
    assert is_evasive(Ud, 2, Ud.n)[0]


def test_evasive_r_below_h_is_immediately_false():
    U = sys_215()
    flag, wit = is_evasive(U, 1, 0)
    assert not flag and wit is None


def test_witness_attains_the_maximum_and_is_recomputable():
    U = sys_310()
    flag, wit = is_evasive(U, 1, U.n, witness=True)
    assert flag and isinstance(wit, EvasiveWitness)
    assert wit.intersection_dim == intersection_dim(U, wit.W)
    assert wit.intersection_dim == 3  # the (1,3)-evasive maximum, attained


def test_short_circuit_witness_certifies_the_violation():
    U = sys_310()
    flag, wit = is_evasive(U, 1, 2)
    assert not flag
    assert wit.intersection_dim > 2
    assert intersection_dim(U, wit.W) == wit.intersection_dim


def test_h_scattered_examples():
    U59 = near_mrd_system(T16, 3, verify=False)
    assert is_h_scattered(U59, 1)  # (k-2)-scattered with k = 3
    from rankgeo.constructions import pseudoregulus_system
    P = pseudoregulus_system(T8, 2, verify=False)
    assert is_h_scattered(P, 1)


def test_no_proper_scattered_systems_below_the_tower_floor():
    # for m < h + 2 and n > k, no h-scattered [n,k] system exists; check an
    # exhaustive slice: every [4,3] system over F_4 (m = 2, h = 1)
    t4 = make_tower(2, 1, 2)
    from rankgeo.linalg import enumerate_subspaces
    ext = t4.ext
    checked = 0
    for B in enumerate_subspaces(2 * 3, 4, t4.base):
        rows = [t4.unflatten(r) for r in B.rows]
        try:
            U = QSystem(t4, Mat(ext, rows))
        except DomainError:
            continue
        assert not is_h_scattered(U, 1)
        checked += 1
    assert checked > 0


def test_rational_full_system_is_scattered_at_n_equals_k():
    # the boundary case: U = F_q^k inside F_{q^2}^k is h-scattered for all
    # h < k even though m < h + 2 for h = 1
    t4 = make_tower(2, 1, 2)
    U = QSystem(t4, Mat.identity(t4.ext, 3))
    assert is_h_scattered(U, 1)
    assert is_h_scattered(U, 2)


def test_hyperplane_spectrum_examples():
    U = sys_215()
    spec = hyperplane_spectrum(U)
    assert len(spec) == 9 and max(spec) == 2
    assert U.n - max(spec) == min_rank_distance(psi(U))

    Ug = phi(gabidulin(T16, 4, 2))
    spec16 = hyperplane_spectrum(Ug)
    assert len(spec16) == 17 and set(spec16) <= {0, 1}

    U1 = QSystem(T8, Mat(T8.ext, [[1], [A], [A2]]))
    assert hyperplane_spectrum(U1) == (0,)


def test_spectrum_distance_link_random():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randrange(2, 5)
        k = rng.randrange(2, n + 1) if n > 2 else 2
        rows = [[rng.randrange(8) for _ in range(n)] for _ in range(k)]
        try:
            C = new_code(T8, Mat(T8.ext, rows))
        except DomainError:
            continue
        if not is_nondegenerate(C)[0]:
            continue
        U = phi(C)
        assert U.n - max(hyperplane_spectrum(U)) == min_rank_distance(psi(U))


def test_rank_metric_dual_of_215_is_itself():
    U = sys_215()
    Ud = rank_metric_dual(U)
    assert Ud.same_subspace(U)


def test_rank_metric_dual_of_310_matches_the_stated_system():
    U = sys_310()
    Ud = rank_metric_dual(U)
    assert (Ud.n, Ud.k) == (5, 3)
    stated = QSystem(T8, Mat(T8.ext, [
        (A, A2, 0), (0, 0, A), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert Ud.same_subspace(stated)


def test_double_dual_preserves_invariants():
    rng = random.Random(17)
    done = 0
    while done < 8:
        n = rng.randrange(3, 6)
        k = rng.randrange(1, n)
        rows = [[rng.randrange(8) for _ in range(n)] for _ in range(k)]
        try:
            C = new_code(T8, Mat(T8.ext, rows))
            U = phi(C)
            Udd = rank_metric_dual(rank_metric_dual(U))
        except DomainError:
            continue
        done += 1
        assert (tuple(generalized_weights_geometric(psi(Udd)))
                == tuple(generalized_weights_geometric(psi(U))))
        assert hyperplane_spectrum(Udd) == hyperplane_spectrum(U)


def test_rank_metric_dual_requires_distance_two():
    # a [3,2] code with a rank-1 codeword: d = 1, dual would be degenerate
    C = new_code(T8, Mat(T8.ext, [[1, 0, 1], [0, 1, A]]))
    assert min_rank_distance(C) == 1
    U = phi(C)
    with pytest.raises(DomainError, match="distance"):
        rank_metric_dual(U)


def test_monotone_evasiveness():
    # (h, r)-evasive implies (h-1, r-1)-evasive
    for U in (sys_310(), near_mrd_system(T16, 3, verify=False)):
        for h in range(1, U.k):
            for r in range(h, U.n + 1):
                if is_evasive(U, h, r)[0]:
                    assert is_evasive(U, h - 1, r - 1)[0]


def test_representative_independence():
    # two different bases of the same subspace give psi codes with equal
    # invariant outputs
    U = sys_310()
    rows = list(U.basis.rows)
    ext = T8.ext
    alt = [tuple(ext.add(a, b) for a, b in zip(rows[0], rows[1]))] + rows[1:]
    U2 = QSystem(T8, Mat(ext, alt))
    assert U2.same_subspace(U)
    assert hyperplane_spectrum(U2) == hyperplane_spectrum(U)
    assert (tuple(generalized_weights_geometric(psi(U2)))
            == tuple(generalized_weights_geometric(psi(U))))


def test_system_validation():
    with pytest.raises(DomainError, match="independent"):
        QSystem(T8, Mat(T8.ext, [[1, 0], [1, 0]]))
    with pytest.raises(DomainError, match="not a q-system"):
        QSystem(T8, Mat(T8.ext, [[1, 0], [A, 0]]))
