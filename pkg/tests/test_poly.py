import pytest
from hypothesis import given, settings

from harmonic_kernels import (
    EVERY_DEGREE,
    INHOMOGENEOUS,
    SparsePolynomial,
    SystemMismatchError,
    UnknownSymbolError,
    VariableSystem,
    combine,
    conjugate,
    degree_profile,
    parse_polynomial,
    partial,
    power,
    restrict_zero,
)
from harmonic_kernels.poly import rename_group, substitute, swap_groups

from conftest import polynomials

SXY = VariableSystem([("x", 3, "real"), ("y", 3, "real")])
SZ = VariableSystem([("z", 2, "complex")])


def P(text, system=SXY):
    return parse_polynomial(text, system)


def test_combine_examples():
    assert combine(P("x[1]+x[2]"), P("x[1]-x[2]"), "mul") == P("x[1]^2-x[2]^2")
    p = P("3*x[1]*x[2]-1/2*x[3]")
    assert combine(p, SparsePolynomial.zero(SXY), "add") == p
    assert combine(P("z[1]+zbar[1]", SZ), P("z[1]+zbar[1]", SZ), "mul") \
        == P("z[1]^2+2*z[1]*zbar[1]+zbar[1]^2", SZ)


def test_power_examples():
    assert power(P("x[1]"), 3) == P("x[1]^3")
    assert power(P("x[1]+x[2]"), 0) == P("1")
    assert power(P("x[1]+x[2]"), 2) == P("x[1]^2+2*x[1]*x[2]+x[2]^2")
    with pytest.raises(ValueError):
        power(P("x[1]"), -1)


def test_partial_examples():
    assert partial(P("z[1]*zbar[1]", SZ), "z", 1) == P("zbar[1]", SZ)
    assert partial(P("x[1]^3"), "x", 1) == P("3*x[1]^2")
    assert partial(P("x[1]^2"), "x", 2).is_zero
    with pytest.raises(UnknownSymbolError):
        partial(P("x[1]"), "w", 1)


def test_conjugate_examples():
    assert conjugate(P("(0,1)*z[1]", SZ)) == P("(0,-1)*zbar[1]", SZ)
    p = P("x[1]+2*x[2]")
    assert conjugate(p) == p
    q = P("(1,2)*z[1]^2*zbar[2]", SZ)
    assert conjugate(conjugate(q)) == q


def test_restrict_zero_examples():
    p = parse_polynomial("x[1]*y[1]+y[1]^2", SXY)
    assert restrict_zero(p, "x") == parse_polynomial("y[1]^2", SXY)
    assert restrict_zero(P("z[1]*zbar[1]", SZ), "z").is_zero
    assert restrict_zero(P("5"), "x") == P("5")


def test_degree_profile():
    assert degree_profile(P("z[1]^2*zbar[2]", SZ), "z") == (2, 1)
    assert degree_profile(P("x[1]*x[2]^3"), "x") == 4
    assert degree_profile(P("x[1]+x[1]^2"), "x") == INHOMOGENEOUS
    assert degree_profile(SparsePolynomial.zero(SXY), "x") == EVERY_DEGREE
    assert degree_profile(P("y[1]"), "x") == 0


def test_system_mismatch():
    other = VariableSystem([("x", 3, "real")])
    with pytest.raises(SystemMismatchError):
        combine(P("x[1]"), parse_polynomial("x[1]", other), "add")


def test_swap_and_rename():
    p = P("x[1]*y[2]+2*x[3]")
    assert swap_groups(swap_groups(p, "x", "y"), "x", "y") == p
    assert rename_group(P("x[1]^2"), "x", "y") == P("y[1]^2")


def test_substitute_linear():
    sx = VariableSystem([("x", 2, "real")])
    p = parse_polynomial("x[1]^2", sx)
    image = parse_polynomial("x[1]+x[2]", sx)
    out = substitute(p, {sx.symbol_id("x", 1): image})
    assert out == parse_polynomial("x[1]^2+2*x[1]*x[2]+x[2]^2", sx)


@settings(max_examples=60)
@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=60)
@given(polynomials(), polynomials())
def test_leibniz_and_conj_homomorphism(a, b):
    for name, idx, bar in (("x", 1, False), ("z", 2, False), ("z", 1, True)):
        da = partial(a, name, idx, bar)
        db = partial(b, name, idx, bar)
        assert partial(a * b, name, idx, bar) == da * b + a * db
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert conjugate(conjugate(a)) == a


@settings(max_examples=60)
@given(polynomials())
def test_partials_commute(a):
    pairs = ((("x", 1, False), ("z", 1, True)),
             (("z", 1, False), ("z", 1, True)),
             (("x", 1, False), ("x", 2, False)))
    for (n1, i1, b1), (n2, i2, b2) in pairs:
        assert partial(partial(a, n1, i1, b1), n2, i2, b2) \
            == partial(partial(a, n2, i2, b2), n1, i1, b1)


@settings(max_examples=40)
@given(polynomials(system=SZ, max_terms=3, max_exp=2))
def test_degree_profile_of_power(a):
    prof = degree_profile(a, "z")
    if not isinstance(prof, tuple):
        return
    cube = power(a, 3)
    got = degree_profile(cube, "z")
    if cube.is_zero:
        assert got == EVERY_DEGREE
    else:
        assert got == (3 * prof[0], 3 * prof[1])
