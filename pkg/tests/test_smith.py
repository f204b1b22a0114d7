from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from adjquot.linalg import determinant, matmul
from adjquot.rootdata import cartan_matrix
from adjquot.smith import smith_normal_form


def square(n_min=1, n_max=5, lo=-6, hi=6):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


@settings(max_examples=150, deadline=None)
@given(square())
def test_transforms_diagonalise(m):
    snf = smith_normal_form(m)
    assert matmul(matmul(snf.left, m), snf.right) == snf.diag
    assert abs(determinant(snf.left)) == 1
    assert abs(determinant(snf.right)) == 1
    n = len(m)
    assert all(snf.diag[i][j] == 0 for i in range(n) for j in range(n) if i != j)


@settings(max_examples=150, deadline=None)
@given(square())
def test_invariant_factors_match_sympy(m):
    ours = smith_normal_form(m).invariant_factors
    assert all(d >= 0 for d in ours)
    assert all(b % a == 0 for a, b in zip(ours, ours[1:]) if a)
    theirs = [abs(int(x)) for x in invariant_factors(Matrix(m), domain=ZZ)]
    assert sorted(ours) == sorted(theirs + [0] * (len(ours) - len(theirs)))


def test_rectangular():
    snf = smith_normal_form([[2, 4, 4], [-6, 6, 12]])
    assert snf.invariant_factors == [2, 6]
    assert matmul(matmul(snf.left, [[2, 4, 4], [-6, 6, 12]]), snf.right) == snf.diag


def test_d4_cartan_diagonal():
    assert smith_normal_form(cartan_matrix("D4")).invariant_factors == [1, 1, 2, 2]


def test_e6_cartan_diagonal():
    assert smith_normal_form(cartan_matrix("E6")).invariant_factors == [1, 1, 1, 1, 1, 3]
