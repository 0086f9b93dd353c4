"""Codes: construction, distances, duality, nondegeneracy, weight profiles.

The two worked examples used throughout ([4,2] and [5,2] over F_8, and the
[5,3] over F_16) are checked against their published values; randomized
properties use fixed seeds.  Element codes: a (F_8) = 2, a^2 = 4, b (F_16)
= 2.
"""

import itertools
import random

import pytest

from rankgeo.errors import DomainError
from rankgeo.fields import make_tower
from rankgeo.linalg import Mat, vec_mat
from rankgeo.codes import (ZeroCode, dual, generalized_weights_galois,
                           generalized_weights_geometric, is_nondegenerate,
                           min_rank_distance, min_rank_distance_bruteforce,
                           new_code, rank_weight)

T8 = make_tower(2, 1, 3)
T16 = make_tower(2, 1, 4)
A, A2 = 2, 4


def code_215():
    return new_code(T8, Mat(T8.ext, [[1, 0, A, 0], [0, 1, 0, A2]]))


def code_310():
    return new_code(T8, Mat(T8.ext, [[1, 0, A, A2, 1], [0, 1, 1, 0, A]]))


def code_59():
    ext = T16.ext
    b = 2
    row = lambda e: tuple(ext.pow(b, e * j) for j in range(5))
    G = Mat(ext, [
        (1, 1, 2, ext.pow(2, 2), ext.pow(2, 3)),
        (0, 1, ext.pow(2, 2), ext.pow(2, 4), ext.pow(2, 6)),
        (0, 1, ext.pow(2, 4), ext.pow(2, 8), ext.pow(2, 12)),
    ])
    return new_code(T16, G)


def random_code(rng, tower, n, k, nondegenerate=False):
    while True:
        rows = [[rng.randrange(tower.order) for _ in range(n)]
                for _ in range(k)]
        try:
            C = new_code(tower, Mat(tower.ext, rows))
        except DomainError:
            continue
        if nondegenerate and not is_nondegenerate(C)[0]:
            continue
        return C


def test_new_code_validates():
    C = code_215()
    assert (C.n, C.k) == (4, 2)
    with pytest.raises(DomainError, match="rank"):
        new_code(T8, Mat(T8.ext, [[1, 0, A, 0], [1, 0, A, 0]]))
    C59 = code_59()
    assert (C59.n, C59.k) == (5, 3)


def test_rank_weight_examples():
    assert rank_weight(T8, (1, 0, A, 0)) == 2
    assert rank_weight(T8, (0, 0, 0, 0)) == 0
    assert rank_weight(T8, (1, A, A2)) == 3


def test_min_distance_worked_examples_and_oracle():
    assert min_rank_distance(code_215()) == 2
    assert min_rank_distance(code_310()) == 2
    full = new_code(T8, Mat.identity(T8.ext, 3))
    assert min_rank_distance(full) == 1
    for C in (code_215(), code_310()):
        assert min_rank_distance(C) == min_rank_distance_bruteforce(C)


def test_min_distance_hyperplane_vs_bruteforce_random():
    rng = random.Random(42)
    for tower in (T8, make_tower(3, 1, 2)):
        for _ in range(15):
            n = rng.randrange(2, 5)
            k = rng.randrange(1, n + 1)
            C = random_code(rng, tower, n, k)
            assert min_rank_distance(C) == min_rank_distance_bruteforce(C)


def test_dual_of_worked_example_is_the_stated_matrix():
    H = dual(code_215())
    assert H.G.rows == ((A, 0, 1, 0), (0, A2, 0, 1))


def test_dual_of_equivalent_310_code_is_the_stated_matrix():
    Gp = Mat(T8.ext, [[1, 0, A, A2, 0], [0, 1, 0, 0, A]])
    Hp = dual(new_code(T8, Gp))
    assert Hp.G.rows == ((A, 0, 1, 0, 0), (A2, 0, 0, 1, 0), (0, A, 0, 0, 1))


def test_biduality_on_random_codes():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randrange(2, 6)
        k = rng.randrange(1, n)
        C = random_code(rng, T8, n, k)
        assert dual(dual(C)).row_space_eq(C)


def test_dual_of_full_code_is_the_zero_sentinel():
    full = new_code(T8, Mat.identity(T8.ext, 2))
    Z = dual(full)
    assert isinstance(Z, ZeroCode) and Z.n == 2
    back = dual(Z)
    assert back.row_space_eq(full)


def test_nondegeneracy_examples():
    assert is_nondegenerate(code_215())[0]
    with_zero_col = new_code(T8, Mat(T8.ext, [[1, 0, 0], [0, 1, 0]]))
    assert not is_nondegenerate(with_zero_col)[0]
    dependent_cols = new_code(T8, Mat(T8.ext, [[1, 1]]))
    assert not is_nondegenerate(dependent_cols)[0]


def test_nondegeneracy_agrees_with_dual_distance_criterion():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randrange(2, 6)
        k = rng.randrange(1, n)
        C = random_code(rng, T8, n, k)
        Cd = dual(C)
        assert is_nondegenerate(C)[0] == (min_rank_distance(Cd) >= 2)


def test_weight_profiles_worked_examples():
    assert tuple(generalized_weights_geometric(code_215())) == (2, 4)
    assert tuple(generalized_weights_galois(code_215())) == (2, 4)
    Cd = dual(code_310())
    assert tuple(generalized_weights_geometric(Cd)) == (2, 3, 5)
    assert tuple(generalized_weights_galois(Cd)) == (2, 3, 5)


def test_full_code_profile_is_one_to_n():
    full = new_code(T8, Mat.identity(T8.ext, 3))
    assert tuple(generalized_weights_geometric(full)) == (1, 2, 3)
    assert tuple(generalized_weights_galois(full)) == (1, 2, 3)


def test_single_row_profile_is_the_generator_rank_weight():
    C = new_code(T8, Mat(T8.ext, [[1, A, A2]]))
    w = rank_weight(T8, (1, A, A2))
    assert w == 3
    assert tuple(generalized_weights_galois(C)) == (w,)


def test_degenerate_codes_are_rejected_by_weight_operations():
    C = new_code(T8, Mat(T8.ext, [[1, 1]]))
    with pytest.raises(DomainError, match="nondegenerate"):
        generalized_weights_geometric(C)
    with pytest.raises(DomainError, match="nondegenerate"):
        generalized_weights_galois(C)


def test_oracle_agreement_exhaustive_small():
    # all nondegenerate [n,k] codes with q = 2, m <= 3, n <= 4, k <= 2
    from rankgeo.linalg import enumerate_subspaces
    for m in (1, 2, 3):
        tower = make_tower(2, 1, m)
        for n in range(1, 5):
            for k in range(1, min(n, 2) + 1):
                for G in enumerate_subspaces(n, k, tower.ext):
                    C = new_code(tower, G)
                    if not is_nondegenerate(C)[0]:
                        continue
                    assert (tuple(generalized_weights_geometric(C))
                            == tuple(generalized_weights_galois(C)))


def test_oracle_agreement_random_larger():
    rng = random.Random(77)
    for _ in range(25):
        q = rng.choice((2, 3))
        m = rng.randrange(1, 4)
        n = rng.randrange(1, 6)
        k = rng.randrange(1, min(n, 3) + 1)
        if n > m * k:
            continue
        tower = make_tower(q, 1, m)
        C = random_code(rng, tower, n, k, nondegenerate=True)
        assert (tuple(generalized_weights_geometric(C))
                == tuple(generalized_weights_galois(C)))


def test_monotonicity_and_terminal_weight():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randrange(2, 6)
        k = rng.randrange(1, min(n, 3) + 1)
        if n > 3 * k:
            continue
        C = random_code(rng, T8, n, k, nondegenerate=True)
        prof = tuple(generalized_weights_geometric(C))
        assert all(x < y for x, y in zip(prof, prof[1:]))
        assert prof[-1] == C.n


def test_wei_duality_partition():
    for C in (code_215(), code_310(), code_59()):
        Cd = dual(C)
        if not is_nondegenerate(Cd)[0]:
            continue
        n = C.n
        prof = tuple(generalized_weights_geometric(C))
        dprof = tuple(generalized_weights_geometric(Cd))
        assert set(prof) | {n + 1 - w for w in dprof} == set(range(1, n + 1))


def test_scalar_and_gl_invariance():
    rng = random.Random(99)
    C = code_310()
    v = (3, 6)
    w0 = rank_weight(T8, vec_mat(v, C.G))
    for lam in range(1, 8):
        scaled = tuple(T8.ext.mul(lam, x) for x in vec_mat(v, C.G))
        assert rank_weight(T8, scaled) == w0
    # column operations over F_q preserve the distance
    from rankgeo.linalg import matmul, rank as mat_rank
    n = C.n
    while True:
        Arows = [[rng.randrange(2) for _ in range(n)] for _ in range(n)]
        Amat = Mat(T8.ext, Arows)
        if mat_rank(Amat) == n:
            break
    CA = new_code(T8, matmul(C.G, Amat))
    assert min_rank_distance(CA) == min_rank_distance(C)


def test_singleton_bound_holds():
    rng = random.Random(55)
    for _ in range(25):
        n = rng.randrange(1, 6)
        k = rng.randrange(1, n + 1)
        C = random_code(rng, T8, n, k)
        d = min_rank_distance(C)
        m = 3
        assert m * k <= min(m * (n - d + 1), n * (m - d + 1))


def test_profile_cache_shares_equal_row_spaces():
    # two generators of the same row space must hit the same cache entry
    C1 = code_215()
    rows2 = [T8.ext.mul(3, x) for x in C1.G.rows[0]], C1.G.rows[1]
    C2 = new_code(T8, Mat(T8.ext, rows2))
    assert C1.key() == C2.key()
    assert (generalized_weights_geometric(C1)
            is generalized_weights_geometric(C2))
