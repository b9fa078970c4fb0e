from fractions import Fraction

import pytest

from harmonic_kernels import (
    HomogeneityError,
    InvalidParamsError,
    SparsePolynomial,
    VariableSystem,
    ZeroDimensionalError,
    complex_params,
    conjugate,
    parse_polynomial,
    real_params,
    symplectic_params,
)
from harmonic_kernels.harmonics import (
    BilinearAtoms,
    decompose,
    kernel,
    norm_sq,
    proj_harmonic_complex,
    proj_harmonic_real,
    proj_symplectic,
    random_poly,
)
from harmonic_kernels.operators import OperatorContext, laplacian, twist
from harmonic_kernels.poly import power, swap_groups

SX = VariableSystem([("x", 3, "real"), ("y", 3, "real")])
SZ2 = VariableSystem([("z", 2, "complex"), ("u", 2, "complex")])


def test_proj_harmonic_real_examples():
    p = parse_polynomial("x[1]^2", SX)
    got = proj_harmonic_real(p, "x", 0)
    want = parse_polynomial("2/3*x[1]^2-1/3*x[2]^2-1/3*x[3]^2", SX)
    assert got == want
    assert laplacian(got, OperatorContext(SX, "x"), "real").is_zero
    # idempotence on harmonics, annihilation of the radial part
    assert proj_harmonic_real(got, "x", 0) == got
    ns = norm_sq(SX, "x")
    assert proj_harmonic_real(ns, "x", 0).is_zero
    with pytest.raises(HomogeneityError):
        proj_harmonic_real(parse_polynomial("x[1]+x[1]^2", SX), "x", 0)
    with pytest.raises(InvalidParamsError):
        proj_harmonic_real(p, "x", 2)


def test_proj_harmonic_complex_examples():
    p = parse_polynomial("z[1]*zbar[1]", SZ2)
    got = proj_harmonic_complex(p, "z", 0)
    want = parse_polynomial("1/2*z[1]*zbar[1]-1/2*z[2]*zbar[2]", SZ2)
    assert got == want
    assert proj_harmonic_complex(got, "z", 0) == got
    assert proj_harmonic_complex(norm_sq(SZ2, "z"), "z", 0).is_zero


def test_proj_symplectic_worked_example():
    at = BilinearAtoms.build(SZ2, "z", "u")
    got = proj_symplectic(at.A * at.Abar, "z", "Edag")
    want = (at.A * at.Abar + at.C * at.Cbar).scale(Fraction(1, 2))
    assert got == want
    # already symplectic: fixed point
    assert proj_symplectic(at.Abar, "z", "Edag") == at.Abar
    with pytest.raises(InvalidParamsError):
        proj_symplectic(at.A * at.A, "z", "Edag")  # bidegree (2,0) needs E


def test_decompose_examples():
    ns = norm_sq(SX, "x")
    comps = decompose(ns, "real", "x")
    assert comps[0].is_zero and comps[1] == ns
    p = parse_polynomial("x[1]^2", SX)
    comps = decompose(p, "real", "x")
    assert comps[0] == proj_harmonic_real(p, "x", 0)
    assert comps[1] == ns.scale(Fraction(1, 3))
    assert sum(comps, SparsePolynomial.zero(SX)) == p
    # a polynomial already in ker Edag decomposes as itself
    at = BilinearAtoms.build(SZ2, "z", "u")
    comps = decompose(at.Abar, "symplectic", "z")
    assert comps == [at.Abar]


def test_symplectic_decompose_roundtrip():
    P = random_poly(11, complex_params(2, 1, 2), "homogeneous", SZ2, "z")
    comps = decompose(P, "symplectic", "z")
    assert sum(comps, SparsePolynomial.zero(SZ2)) == P
    ctx = OperatorContext(SZ2, "z")
    # leading component is the symplectic part
    assert twist(comps[0], ctx, "Edag").is_zero


def test_kernel_examples():
    assert kernel(real_params(3, 0), "K") == \
        SparsePolynomial.constant(kernel(real_params(3, 0), "K").system, 1)
    k1 = kernel(real_params(3, 1), "K")
    sysk = k1.system
    assert k1 == parse_polynomial("3*x[1]*y[1]+3*x[2]*y[2]+3*x[3]*y[3]", sysk)
    zs02 = kernel(symplectic_params(1, 0, 2), "ZS")
    at = BilinearAtoms.build(zs02.system, "z", "u")
    assert zs02 == power(at.Abar, 2).scale(Fraction(1, 2))
    zs11 = kernel(symplectic_params(1, 1, 1), "ZS")
    at = BilinearAtoms.build(zs11.system, "z", "u")
    assert zs11 == at.quat_modsq.scale(Fraction(1, 2))
    with pytest.raises(InvalidParamsError):
        kernel(real_params(3, 1), "ZS")


def test_kernel_hermitian_and_zero_cases():
    K = kernel(complex_params(2, 2, 1), "K")
    assert conjugate(K) == swap_groups(K, "z", "u")
    # quaternionic dimension 1 admits no symplectic harmonics above p = 0
    ks = kernel(symplectic_params(1, 1, 1), "KS")
    assert ks.is_zero
    ks2 = kernel(symplectic_params(2, 1, 1), "KS")
    assert not ks2.is_zero


def test_bilinear_atoms_invariants():
    from harmonic_kernels import KindMismatchError
    at = BilinearAtoms.build(SZ2, "z", "u")
    assert swap_groups(at.C, "z", "u") == -at.C
    assert at.quat_modsq == at.A * at.Abar + at.C * at.Cbar
    assert conjugate(at.quat_modsq) == at.quat_modsq
    with pytest.raises(KindMismatchError):
        BilinearAtoms.build(VariableSystem([("z", 3, "complex"),
                                            ("u", 3, "complex")]), "z", "u")


def test_random_poly_flavors():
    H = random_poly(5, real_params(4, 3), "harmonic")
    ctx = OperatorContext(H.system, "x")
    assert laplacian(H, ctx, "real").is_zero
    R = random_poly(5, symplectic_params(1, 1, 2), "symplectic")
    assert twist(R, OperatorContext(R.system, "z"), "Edag").is_zero
    assert random_poly(9, real_params(3, 2), "harmonic") == \
        random_poly(9, real_params(3, 2), "harmonic")
    assert random_poly(9, real_params(3, 2), "harmonic") != \
        random_poly(10, real_params(3, 2), "harmonic")
    with pytest.raises(ZeroDimensionalError):
        random_poly(1, symplectic_params(1, 1, 1), "symplectic_harmonic")


def test_symplectic_harmonic_flavor():
    H = random_poly(3, symplectic_params(2, 1, 1), "symplectic_harmonic")
    ctx = OperatorContext(H.system, "z")
    assert laplacian(H, ctx, "complex").is_zero
    assert twist(H, ctx, "Edag").is_zero
