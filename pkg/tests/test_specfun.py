from fractions import Fraction

import pytest

from harmonic_kernels import InvalidParamsError, complex_params, real_params, symplectic_params
from harmonic_kernels.oracles import (
    nullspace_dim_laplacian_complex,
    nullspace_dim_laplacian_real,
    nullspace_dim_symplectic_HS,
    nullspace_dim_symplectic_R,
)
from harmonic_kernels.specfun import (
    UnivariateExact,
    dim_bidegree_space,
    dim_formulas,
    gegenbauer,
    gegenbauer_by_recurrence,
    jacobi,
    jacobi_by_recurrence,
    pochhammer,
)


def test_pochhammer_examples():
    assert pochhammer(7, 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    with pytest.raises(InvalidParamsError):
        pochhammer(1, -1)


def test_gegenbauer_examples():
    mu = Fraction(5, 2)
    assert gegenbauer(0, mu).coeffs == UnivariateExact([1]).coeffs
    c1 = gegenbauer(1, mu)
    assert c1.degree == 1 and c1.coefficient(1) == 2 * mu
    legendre2 = gegenbauer(2, Fraction(1, 2))
    assert legendre2.coefficient(2) == Fraction(3, 2)
    assert legendre2.coefficient(0) == Fraction(-1, 2)
    with pytest.raises(InvalidParamsError):
        gegenbauer(2, 0)
    with pytest.raises(InvalidParamsError):
        gegenbauer(2, Fraction(-1, 2))


def test_gegenbauer_recurrence_grid():
    for mu in (Fraction(1, 2), 1, Fraction(3, 2), 2, Fraction(5, 2)):
        for k in range(9):
            assert gegenbauer(k, mu) == gegenbauer_by_recurrence(k, mu)


def test_jacobi_examples():
    assert jacobi(0, 2, 3).coeffs == UnivariateExact([1]).coeffs
    legendre1 = jacobi(1, 0, 0)
    assert legendre1.coefficient(0) == 0 and legendre1.coefficient(1) == 1
    a, b = Fraction(3, 2), Fraction(1, 3)
    p1 = jacobi(1, a, b)
    # (a+1) + (a+b+2)(x-1)/2
    assert p1.coefficient(0) == (a + 1) - (a + b + 2) / 2
    assert p1.coefficient(1) == (a + b + 2) / 2
    with pytest.raises(InvalidParamsError):
        jacobi(2, Fraction(-3, 2), 0)


def test_jacobi_recurrence_and_reflection():
    grid = (0, 1, 2, Fraction(1, 2), Fraction(-1, 2))
    for a in grid:
        for b in grid:
            for nu in range(7):
                assert jacobi(nu, a, b) == jacobi_by_recurrence(nu, a, b)
                lhs = jacobi(nu, a, b)
                rhs = jacobi(nu, b, a)
                for i in range(nu + 1):
                    assert lhs.coefficient(i) * (-1) ** (nu + i) == rhs.coefficient(i)


def test_jacobi_boundary_alpha():
    # alpha = -1 is admitted (needed at quaternionic dimension 1); the sum
    # still produces a genuine polynomial, with P_1^{-1,1}(x) = x - 1
    p = jacobi(1, -1, 1)
    assert p.coefficient(0) == -1 and p.coefficient(1) == 1
    assert jacobi(1, -1, 1)(1) == 0


def test_univariate_exact_basics():
    u = UnivariateExact([1, 0, 0])
    assert u.degree == 0
    v = UnivariateExact([1, 2])
    w = v.compose_affine(2, -1)  # 1 + 2(2s - 1) = 4s - 1
    assert w.coefficient(0) == -1 and w.coefficient(1) == 4
    assert v(Fraction(1, 2)) == 2


def test_dim_examples():
    assert dim_formulas(real_params(3, 2), "spherical") == 5
    assert dim_formulas(real_params(4, 3), "spherical") == 16
    assert dim_formulas(complex_params(2, 1, 1), "complex_bidegree") == 3
    # 3 + 3 + 3 = 9 = dim H_2(R^4)
    total = sum(dim_formulas(complex_params(2, p, 2 - p), "complex_bidegree")
                for p in range(3))
    assert total == dim_formulas(real_params(4, 2), "spherical")


def test_dim_oracles_spot():
    assert nullspace_dim_laplacian_real(3, 2) == 5
    assert nullspace_dim_laplacian_complex(2, 1, 1) == 3
    assert nullspace_dim_symplectic_R(2, 1, 2) == \
        dim_formulas(symplectic_params(1, 1, 2), "symplectic_R")
    assert nullspace_dim_symplectic_HS(2, 1, 1) == 0 == \
        dim_formulas(symplectic_params(1, 1, 1), "symplectic_HS")
    assert dim_bidegree_space(2, 1, 1) == 4
