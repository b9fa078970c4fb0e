from fractions import Fraction

import pytest

from harmonic_kernels import (
    InvalidParamsError,
    KindMismatchError,
    SparsePolynomial,
    VariableSystem,
    complex_params,
    parse_polynomial,
    real_params,
    symplectic_params,
)
from harmonic_kernels.harmonics import hermitian_pair, real_inner
from harmonic_kernels.pizzetti import (
    ST2,
    Caps,
    StiefelContext,
    apply_I,
    plane_wave,
    stiefel1_mean,
    stiefel2_mean,
    stiefel_jl_contributions,
    stiefel_mean,
    stiefel_mean_by_operators,
    stiefel_mean_product,
    verify_planewave,
)
from harmonic_kernels.poly import conjugate, power


def test_stiefel1_mean_examples():
    wave = plane_wave(real_params(3, 1))
    system = wave.system
    one = SparsePolynomial.constant(system, 1)
    assert stiefel1_mean(one, wave.ctx) == one
    mean = stiefel_mean_product(wave.half_z, wave.half_u, wave.ctx)
    want = real_inner(system, "x", "y").scale(Fraction(2, 3))
    assert mean == want
    t1sq = parse_polynomial("t[1]^2", system)
    assert stiefel1_mean(t1sq, wave.ctx) == SparsePolynomial.constant(system, Fraction(1, 3))
    s1sq = parse_polynomial("s[1]^2", system)
    assert stiefel1_mean(s1sq, wave.ctx) == SparsePolynomial.constant(system, Fraction(1, 3))


def test_stiefel2_mean_examples():
    system = VariableSystem([("z", 2, "complex"), ("u", 2, "complex"),
                             ("s", 2, "complex"), ("t", 2, "complex")])
    ctx = StiefelContext(ST2, system, "s", "t")
    one = SparsePolynomial.constant(system, 1)
    assert stiefel2_mean(one, ctx) == one
    f = parse_polynomial("s[1]*sbar[1]+t[1]*tbar[1]", system)
    assert stiefel2_mean(f, ctx) == one
    with pytest.raises(KindMismatchError):
        stiefel1_mean(f, ctx)
    with pytest.raises(InvalidParamsError):
        StiefelContext(ST2, VariableSystem([("s", 1, "complex"), ("t", 1, "complex")]),
                       "s", "t")


def test_apply_I_lemma_small_cases():
    wave = plane_wave(real_params(3, 1))
    system = wave.system
    f1 = wave.half_z * wave.half_u  # already normalized: (1!)^2 = 1
    xy = real_inner(system, "x", "y")
    assert apply_I(f1, wave.ctx, "I1") == xy.scale(4)
    assert apply_I(f1, wave.ctx, "I2").is_zero
    cwave = plane_wave(complex_params(2, 1, 0))
    A = hermitian_pair(cwave.system, "z", "u")
    assert apply_I(cwave.half_z * cwave.half_u, cwave.ctx, "I1") == A.scale(8)


def test_degree_selection_small():
    wave = plane_wave(real_params(3, 2))
    f = wave.half_z * wave.half_u
    contribs = stiefel_jl_contributions(f, wave.ctx, by_operators=True)
    for (j, l), piece in contribs.items():
        if j != 2:
            assert piece.is_zero, (j, l)
    total = SparsePolynomial.zero(wave.system)
    for piece in contribs.values():
        total = total + piece
    assert total == stiefel_mean(f, wave.ctx)


def test_mean_paths_agree():
    wave = plane_wave(real_params(3, 2))
    f = wave.half_z * wave.half_u
    assert stiefel_mean(f, wave.ctx) == stiefel_mean_by_operators(f, wave.ctx)
    assert stiefel_mean_product(wave.half_z, wave.half_u, wave.ctx) \
        == stiefel_mean(f, wave.ctx)


def test_plane_wave_homogeneity():
    from harmonic_kernels import degree_profile
    w = plane_wave(real_params(3, 2))
    f = w.half_z * w.half_u
    assert degree_profile(f, "x") == 2 and degree_profile(f, "y") == 2
    joint = degree_profile(f, "s")  # degree splits between s and t
    assert joint in (0, 1, 2, "inhomogeneous")
    total = {sum(e for s_, e in mono
                 if w.system.group_of(s_) in ("s", "t")) for mono in f.terms}
    assert total == {4}  # jointly homogeneous of degree 2k in (s, t)


def test_plane_wave_examples():
    w0 = plane_wave(real_params(3, 0))
    assert w0.half_z == SparsePolynomial.constant(w0.system, 1)
    w1 = plane_wave(real_params(3, 1))
    assert parse_polynomial("x[1]*t[1]+(0,1)*x[1]*s[1]+x[2]*t[2]+(0,1)*x[2]*s[2]"
                            "+x[3]*t[3]+(0,1)*x[3]*s[3]", w1.system) == w1.half_z
    g = plane_wave(symplectic_params(1, 0, 2))
    zb = g.system.group("z").barred
    tpluss = [parse_polynomial(f"t[{j}]+s[{j}]", g.system) for j in (1, 2)]
    abar = SparsePolynomial.from_sid(g.system, zb[0]) * tpluss[0] \
        + SparsePolynomial.from_sid(g.system, zb[1]) * tpluss[1]
    assert g.half_z == power(abar, 2).scale(Fraction(1, 2))
    assert any("prefactor" in note for note in g.notes)


def test_verify_planewave_passes_and_notes():
    r = verify_planewave(real_params(3, 1))
    assert r.status == "pass"
    r = verify_planewave(complex_params(2, 1, 0))
    assert r.status == "pass"
    assert any("constant" in n for n in r.resolution_notes)
    r = verify_planewave(symplectic_params(1, 1, 1))
    assert r.status == "pass"
    assert any("<zbar,u>" in n for n in r.resolution_notes)


def test_caps_produce_skipped():
    tiny = Caps(max_terms=10)
    r = verify_planewave(real_params(3, 2), caps=tiny)
    assert r.status == "skipped"
    assert any(n.startswith("cap:") for n in r.resolution_notes)
    degcap = Caps(max_degree=2)
    r = verify_planewave(real_params(3, 2), caps=degcap)
    assert r.status == "skipped"
    assert any(n == "cap:max_degree" for n in r.resolution_notes)


def test_mean_product_matches_direct_on_symplectic():
    pr = symplectic_params(1, 1, 2)
    wave = plane_wave(pr)
    direct = stiefel_mean(wave.half_z * wave.half_u, wave.ctx)
    paired = stiefel_mean_product(wave.half_z, wave.half_u, wave.ctx)
    assert direct == paired


def test_norm_preserved_under_conjugation_of_halves():
    # conj swaps the roles of the halves; the mean of a |g|^2-type integrand
    # is self-conjugate up to the z<->u swap
    pr = symplectic_params(1, 0, 1)
    wave = plane_wave(pr)
    mean = stiefel_mean_product(wave.half_z, wave.half_u, wave.ctx)
    from harmonic_kernels.poly import swap_groups
    assert conjugate(mean) == swap_groups(mean, "z", "u")
