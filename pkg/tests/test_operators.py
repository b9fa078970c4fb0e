from fractions import Fraction

import pytest

from harmonic_kernels import (
    HomogeneityError,
    KindMismatchError,
    VariableSystem,
    parse_polynomial,
)
from harmonic_kernels.operators import (
    OperatorContext,
    euler,
    fischer_by_differentiation,
    fischer_complex,
    fischer_form,
    fischer_real,
    grad_pair,
    laplacian,
    sphere_mean,
    sphere_mean_series,
    spherical_inner,
    twist,
)
from harmonic_kernels.specfun import pochhammer

SX = VariableSystem([("x", 3, "real"), ("y", 3, "real")])
SZ = VariableSystem([("z", 2, "complex"), ("u", 2, "complex")])
ST = VariableSystem([("s", 2, "real"), ("t", 2, "real")])
SZT = VariableSystem([("s", 2, "complex"), ("t", 2, "complex")])


def px(text, sys=SX):
    return parse_polynomial(text, sys)


def test_euler_examples():
    ctx = OperatorContext(SX, "x")
    assert euler(px("x[1]^2*x[2]"), ctx) == px("3*x[1]^2*x[2]")
    czl = OperatorContext(SZ, "z")
    p = px("z[1]^2*zbar[2]", SZ)
    assert euler(p, czl, "holomorphic") == p.scale(2)
    assert euler(p, czl, "antiholomorphic") == p.scale(1)
    with pytest.raises(KindMismatchError):
        euler(px("x[1]"), ctx, "holomorphic")


def test_laplacian_examples():
    s2 = VariableSystem([("x", 2, "real")])
    ctx = OperatorContext(s2, "x")
    assert laplacian(parse_polynomial("x[1]^2+x[2]^2", s2), ctx) \
        == parse_polynomial("4", s2)
    cz = OperatorContext(SZ, "z")
    zz = px("z[1]*zbar[1]", SZ)
    assert laplacian(zz, cz, "complex") == px("1", SZ)
    assert laplacian(zz, cz, "real") == px("4", SZ)
    with pytest.raises(KindMismatchError):
        laplacian(px("x[1]^2"), OperatorContext(SX, "x"), "complex")


def test_twist_examples():
    ctx = OperatorContext(SZ, "z")
    abar = px("zbar[1]*u[1]+zbar[2]*u[2]", SZ)
    c = px("z[1]*u[2]-z[2]*u[1]", SZ)
    a = px("z[1]*ubar[1]+z[2]*ubar[2]", SZ)
    assert twist(abar, ctx, "E") == c
    assert twist(c, ctx, "Edag") == abar
    assert twist(a, ctx, "E").is_zero
    odd = VariableSystem([("z", 3, "complex")])
    with pytest.raises(KindMismatchError):
        twist(parse_polynomial("z[1]", odd), OperatorContext(odd, "z"), "E")


def test_grad_pair_examples():
    assert grad_pair(parse_polynomial("s[1]*t[1]", ST), "s", "t") \
        == parse_polynomial("1", ST)
    assert grad_pair(parse_polynomial("s[1]*t[2]", ST), "s", "t").is_zero
    p = parse_polynomial("s[1]*tbar[1]+s[2]*tbar[1]", SZT)
    assert grad_pair(p, "s", "t", "holo_anti") == parse_polynomial("1", SZT)
    uneven = VariableSystem([("a", 2, "real"), ("b", 3, "real")])
    with pytest.raises(KindMismatchError):
        grad_pair(parse_polynomial("a[1]*b[1]", uneven), "a", "b")
    with pytest.raises(KindMismatchError):
        grad_pair(parse_polynomial("s[1]*t[1]", ST), "s", "t", "holo_anti")


def test_fischer_real_examples():
    assert fischer_real(px("x[1]^2"), px("x[1]^2"), "x") == 2
    assert fischer_real(px("x[1]*x[2]"), px("x[1]*x[2]"), "x") == 1
    ns = px("x[1]^2+x[2]^2+x[3]^2")
    f = px("x[1]^2+x[2]^2")
    one = px("1")
    ctx = OperatorContext(SX, "x")
    lhs = fischer_real(ns * one, f, "x")
    rhs = fischer_real(one, laplacian(f, ctx), "x")
    assert lhs == rhs == 4
    with pytest.raises(HomogeneityError):
        fischer_real(px("x[1]*y[1]"), px("x[1]"), "x")
    with pytest.raises(KindMismatchError):
        fischer_complex(px("x[1]"), px("x[1]"), "x")


def test_fischer_complex_examples():
    z1 = px("z[1]", SZ)
    assert fischer_complex(z1, z1, "z") == 1
    assert fischer_complex(px("z[1]^2", SZ), px("z[1]^2", SZ), "z") == 2
    zc = px("z[1]*zbar[2]", SZ)
    assert fischer_complex(zc, zc, "z") == 1


def test_fischer_operator_path_agrees():
    pairs = [(px("x[1]^2+2*x[2]*x[3]"), px("x[1]^2-x[3]^2")),
             (px("(0,1)*x[1]^3"), px("x[1]^3+x[2]^3"))]
    for a, b in pairs:
        assert fischer_form(a, b, "x") == fischer_by_differentiation(a, b, "x")
    a = px("(1,1)*z[1]*zbar[2]", SZ)
    b = px("z[1]*zbar[2]+z[2]*zbar[1]", SZ)
    assert fischer_form(a, b, "z") == fischer_by_differentiation(a, b, "z")


def test_sphere_mean_examples():
    assert sphere_mean(px("1"), "x") == px("1")
    assert sphere_mean(px("x[1]^2"), "x") == px("1/3")
    assert sphere_mean(px("x[1]^4"), "x") == px("1/5")
    assert sphere_mean(px("x[1]"), "x").is_zero
    mixed = px("x[1]^2*y[2]+y[1]")
    assert sphere_mean(mixed, "x") == px("1/3*y[2]+y[1]")
    assert sphere_mean_series(mixed, "x") == sphere_mean(mixed, "x")


def test_sphere_mean_complex_group():
    p = parse_polynomial("z[1]*zbar[1]", SZ)
    assert sphere_mean(p, "z") == parse_polynomial("1/2", SZ)
    assert sphere_mean_series(p, "z") == parse_polynomial("1/2", SZ)
    assert sphere_mean(parse_polynomial("z[1]*zbar[2]", SZ), "z").is_zero


def test_spherical_inner_and_proportionality():
    assert spherical_inner(px("x[1]"), px("x[1]"), "x") == px("1/3")
    assert spherical_inner(px("x[1]"), px("x[2]"), "x").is_zero
    c = 2 * pochhammer(Fraction(3, 2), 1)
    lhs = spherical_inner(px("x[1]"), px("x[1]"), "x").constant_value() * c
    assert lhs == fischer_real(px("x[1]"), px("x[1]"), "x")
