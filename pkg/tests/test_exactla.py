from fractions import Fraction

import pytest

from minorbit.exactla import QI, exact_sqrt, kernel_basis, orthogonalize, rank, rref, solve


def test_qi_arithmetic():
    a = QI(1, 2)
    b = QI(Fraction(1, 2), -1)
    assert a + b == QI(Fraction(3, 2), 1)
    assert a * b == QI(Fraction(5, 2), 0)
    assert (a / b) * b == a
    assert a.conjugate() == QI(1, -2)
    assert QI(3) == 3 and QI(3) == Fraction(3)
    assert not QI(0, 0)
    with pytest.raises(ZeroDivisionError):
        a / QI(0)


def test_qi_mixed_coercion():
    assert Fraction(1, 2) * QI(0, 2) == QI(0, 1)
    assert 1 + QI(1, 1) == QI(2, 1)
    assert Fraction(2) - QI(1, 1) == QI(1, -1)


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert exact_sqrt(Fraction(0)) == 0
    assert exact_sqrt(Fraction(2)) is None
    with pytest.raises(ValueError):
        exact_sqrt(Fraction(-1))


def test_rref_and_rank():
    mat = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    red, pivots = rref(mat)
    assert pivots == [0]
    assert rank(mat) == 1
    assert rank([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]) == 2


def test_kernel_basis():
    mat = [[Fraction(1), Fraction(2), Fraction(3)]]
    basis = kernel_basis(mat)
    assert len(basis) == 2
    for v in basis:
        assert sum(m * x for m, x in zip(mat[0], v)) == 0


def test_solve():
    mat = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    sol = solve(mat, [Fraction(5), Fraction(10)])
    assert sol == [Fraction(1), Fraction(3)]
    inconsistent = solve(
        [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]],
        [Fraction(1), Fraction(3)],
    )
    assert inconsistent is None


def test_kernel_over_gaussian_rationals():
    mat = [[QI(1), QI(0, 1)]]
    basis = kernel_basis(mat)
    assert len(basis) == 1
    v = basis[0]
    assert mat[0][0] * v[0] + mat[0][1] * v[1] == QI(0)


def test_orthogonalize():
    def form(u, v):
        return sum(a * b for a, b in zip(u, v))

    vecs = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(2)]]
    ortho = orthogonalize(vecs, form)
    assert len(ortho) == 2
    assert form(ortho[0], ortho[1]) == 0
