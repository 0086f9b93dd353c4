"""RREF, kernels, span dimensions, intersections, subspace enumeration.

Gaussian binomial oracles are computed independently from the product
formula inside the tests and frozen against the enumeration counts.
"""

import itertools
import random

import pytest

from rankgeo.errors import BudgetError, DomainError
from rankgeo.fields import make_tower
from rankgeo.linalg import (Echelon, Mat, enumerate_subspaces, fq_span_dim,
                            gaussian_binomial, intersect_fq, kernel, matmul,
                            rank, rref, span_dim, vec_mat)

T8 = make_tower(2, 1, 3)
F8 = T8.ext
A, A2 = 2, 4  # codes of a and a^2 in F_8

# generator of the worked [4,2] example over F_8
G215 = Mat(F8, [[1, 0, A, 0], [0, 1, 0, A2]])


def gaussian_oracle(n, k, q):
    """Independent product-formula evaluation, exact rationals via Fraction."""
    from fractions import Fraction
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(q ** (n - i) - 1, q ** (i + 1) - 1)
    assert out.denominator == 1
    return out.numerator


def test_rref_identity_and_zero():
    I = Mat.identity(F8, 2)
    R, rk, piv = rref(I)
    assert R == I and rk == 2 and piv == (0, 1)
    Z = Mat.zero(F8, 2, 4)
    R, rk, piv = rref(Z)
    assert rk == 0 and piv == () and R.nrows == 0


def test_rref_of_the_worked_generator():
    R, rk, piv = rref(G215)
    assert rk == 2
    assert R == G215  # already reduced


def test_rref_idempotent_on_random_matrices():
    rng = random.Random(3)
    for _ in range(30):
        M = Mat(F8, [[rng.randrange(8) for _ in range(4)] for _ in range(3)])
        R1, _, _ = rref(M)
        R2, _, _ = rref(R1)
        assert R1 == R2


def test_kernel_of_worked_generator_is_the_stated_parity_check():
    H = kernel(G215)
    assert H.rows == ((A, 0, 1, 0), (0, A2, 0, 1))
    # kernel rows actually annihilate the generator
    prod = matmul(G215, H.transpose())
    assert all(x == 0 for row in prod.rows for x in row)


def test_kernel_trivial_cases():
    assert kernel(Mat.identity(F8, 3)).nrows == 0
    assert kernel(Mat.zero(F8, 2, 4)).nrows == 4


def test_rank_nullity_on_random_matrices():
    rng = random.Random(5)
    for field in (T8.ext, make_tower(3, 1, 2).ext):
        for _ in range(25):
            M = Mat(field, [[rng.randrange(field.order) for _ in range(5)]
                            for _ in range(3)])
            assert rank(M) + kernel(M).nrows == M.ncols


def test_fq_span_dim_examples():
    assert fq_span_dim(T8, [(1,), (A,), (A2,)]) == 3
    assert fq_span_dim(T8, [(1,), (A,), (3,)]) == 2  # a+1 = 1 + a
    cols = [G215.col(j) for j in range(4)]
    assert fq_span_dim(T8, cols) == 4


def test_intersect_fq_basics():
    f2 = T8.base
    A_ = Mat(f2, [[1, 0, 0, 0], [0, 1, 0, 0]])
    B_ = Mat(f2, [[0, 0, 1, 0], [0, 0, 0, 1]])
    assert intersect_fq(A_, A_).rows == A_.rows
    assert intersect_fq(A_, B_).nrows == 0
    with pytest.raises(DomainError):
        intersect_fq(A_, Mat(f2, [[1, 0]]))


def test_intersect_worked_example_dimension_two():
    # U = flattened column span of the worked generator; H = the F_8-line
    # through (0, 1); their intersection has F_2-dimension 2
    f2 = T8.base
    U = Mat(f2, [T8.flatten(c) for c in (G215.col(j) for j in range(4))])
    line = Mat(f2, [T8.flatten((0, lam)) for lam in (1, A, A2)])
    inter = intersect_fq(U, line)
    assert inter.nrows == 2


def test_intersect_dimension_formula_random():
    rng = random.Random(9)
    f3 = make_tower(3, 1, 1).base
    for _ in range(30):
        Am = Mat(f3, [[rng.randrange(3) for _ in range(5)] for _ in range(2)])
        Bm = Mat(f3, [[rng.randrange(3) for _ in range(5)] for _ in range(3)])
        inter = intersect_fq(Am, Bm)
        stacked = rank(Am.stack(Bm))
        assert inter.nrows == rank(Am) + rank(Bm) - stacked


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1, 8) == 9 == gaussian_oracle(2, 1, 8)
    assert gaussian_binomial(4, 2, 2) == 35 == gaussian_oracle(4, 2, 2)
    assert gaussian_binomial(5, 2, 8) == gaussian_oracle(5, 2, 8) == 304265
    assert gaussian_binomial(3, 0, 5) == 1
    assert gaussian_binomial(3, 4, 5) == 0


@pytest.mark.parametrize("ambient,dim,field,count", [
    (2, 1, F8, 9),
    (4, 2, T8.base, 35),
    (3, 0, F8, 1),
])
def test_enumeration_counts(ambient, dim, field, count):
    it = enumerate_subspaces(ambient, dim, field)
    mats = list(it)
    assert len(mats) == count == it.count
    # RREF representatives are pairwise distinct and already reduced
    seen = {m.rows for m in mats}
    assert len(seen) == count
    for m in mats[:10]:
        R, rk, _ = rref(m)
        assert R == m and rk == dim


def test_enumeration_of_dimension_zero_yields_the_zero_space():
    mats = list(enumerate_subspaces(4, 0, T8.base))
    assert len(mats) == 1 and mats[0].nrows == 0


def test_enumeration_completeness_by_point_counts():
    # each nonzero vector of F_q^n lies in exactly [n-1 choose k-1]_q
    # subspaces of dimension k, so counting the nonzero vectors of every
    # enumerated subspace (with multiplicity) must reach
    # (q^n - 1) * [n-1 choose k-1]_q
    for (n, k, tower) in [(4, 2, make_tower(2)), (5, 3, make_tower(2)),
                          (3, 2, make_tower(3))]:
        field = tower.base
        q = field.order
        total = sum(q ** M.nrows - 1 for M in enumerate_subspaces(n, k, field))
        assert total == (q ** n - 1) * gaussian_binomial(n - 1, k - 1, q)


def test_budget_error_is_raised_up_front():
    with pytest.raises(BudgetError):
        enumerate_subspaces(4, 2, F8, budget=10)


def test_split_and_random_access_cover_the_same_subspaces():
    it = enumerate_subspaces(4, 2, T8.base)
    whole = [m.rows for m in it]
    parts = it.split(3)
    glued = [m.rows for part in parts for m in part]
    assert glued == whole
    assert [it.subspace_at(i).rows for i in range(len(whole))] == whole


def test_echelon_matches_rref_rank_both_paths():
    rng = random.Random(17)
    for field in (T8.base, make_tower(3, 1, 1).base, F8):
        for _ in range(20):
            rows = [[rng.randrange(field.order) for _ in range(6)]
                    for _ in range(4)]
            ech = Echelon(field, 6)
            ech.insert_all(rows)
            assert ech.dim == rank(Mat(field, rows))


def test_vec_mat_and_matmul_agree():
    rng = random.Random(21)
    M = Mat(F8, [[rng.randrange(8) for _ in range(4)] for _ in range(2)])
    v = (3, 5)
    assert vec_mat(v, M) == matmul(Mat(F8, [v]), M).rows[0]


def test_mat_rejects_foreign_entries():
    with pytest.raises(DomainError):
        Mat(T8.base, [[0, 1], [2, 0]])  # 2 is not an F_2 code
