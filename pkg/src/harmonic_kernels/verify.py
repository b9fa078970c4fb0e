"""Identity catalog and verification driver.

Every invariant of the engine is registered here as an (identity, grid,
runner) triple.  Runners compute both sides of an identity as exact
polynomials (or exact scalars wrapped as constant polynomials) and emit one
VerificationReport per parameter point; the first differing monomial is the
failure witness.  Grids follow the acceptance defaults and can be narrowed
from the CLI.  Tasks are pure, so the driver can fan them out over a
process pool; the merged stream is sorted deterministically.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import CapExceeded
from .harmonics import (
    BilinearAtoms,
    decompose,
    hermitian_pair,
    kernel,
    norm_sq,
    proj_harmonic_complex,
    proj_harmonic_real,
    proj_symplectic,
    random_poly,
    real_inner,
)
from .operators import (
    OperatorContext,
    euler,
    fischer_by_differentiation,
    fischer_form,
    grad_pair,
    laplacian,
    sphere_mean,
    sphere_mean_series,
    spherical_inner,
    twist,
)
from .oracles import (
    cayley_rotation,
    grad_pair_J,
    nullspace_dim_laplacian_complex,
    nullspace_dim_laplacian_real,
    nullspace_dim_symplectic_HS,
    nullspace_dim_symplectic_R,
    realify,
    rotate_group,
)
from .params import KernelParams, complex_params, real_params, symplectic_params
from .pizzetti import (
    ST1,
    ST2,
    Caps,
    DEFAULT_CAPS,
    StiefelContext,
    apply_I,
    plane_wave,
    stiefel_jl_contributions,
    stiefel_mean,
    stiefel_mean_by_operators,
    stiefel_mean_product,
    verify_planewave,
)
from .poly import (
    SparsePolynomial,
    conjugate,
    degree_profile,
    power,
    rename_group,
    swap_groups,
)
from .report import FAIL, PASS, SKIPPED, VerificationReport, first_difference
from .rng import Rng, derive_seed
from .scalars import ExactScalar
from .specfun import (
    dim_bidegree_space,
    dim_formulas,
    gegenbauer,
    gegenbauer_by_recurrence,
    jacobi,
    jacobi_by_recurrence,
    pochhammer,
)
from .variables import VariableSystem

SUITES = ("spherical", "complex", "symplectic", "pizzetti", "planewave")

# pair-product estimate above which the action-lemma integrand is not
# materialized on the default grids (the cut corners stay reachable by
# raising the cap)
LEMMA_PAIR_BUDGET = 700_000


@dataclass(frozen=True)
class GridConfig:
    real_m: tuple = (3, 4, 5)
    real_kmax: int = 4
    complex_n: tuple = (2, 3)
    complex_degmax: int = 3
    symp_n: tuple = (1, 2)
    symp1_summax: int = 5
    symp2_degmax: int = 2
    k_exact: int | None = None
    p_exact: int | None = None
    q_exact: int | None = None
    lemma_kmax: int = 5
    lemma_degmax: int = 3
    repro_seeds: int = 5
    op_seeds: int = 20

    def real_ks(self):
        ks = range(self.real_kmax + 1)
        return [k for k in ks if self.k_exact is None or k == self.k_exact]

    def complex_pqs(self):
        out = []
        for p in range(self.complex_degmax + 1):
            for q in range(self.complex_degmax + 1):
                if self.p_exact is not None and p != self.p_exact:
                    continue
                if self.q_exact is not None and q != self.q_exact:
                    continue
                out.append((p, q))
        return out

    def symp_pqs(self, n: int):
        out = []
        if n == 1:
            pairs = [(p, q) for p in range(self.symp1_summax + 1)
                     for q in range(p, self.symp1_summax + 1)
                     if p + q <= self.symp1_summax]
        else:
            pairs = [(p, q) for p in range(self.symp2_degmax + 1)
                     for q in range(p, self.symp2_degmax + 1)]
        for p, q in pairs:
            if self.p_exact is not None and p != self.p_exact:
                continue
            if self.q_exact is not None and q != self.q_exact:
                continue
            out.append((p, q))
        return out


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    caps: Caps = DEFAULT_CAPS
    timings: bool = False
    grid: GridConfig = GridConfig()


# -- small helpers --------------------------------------------------------------------


def _real_system(m: int) -> VariableSystem:
    return VariableSystem([("x", m, "real"), ("y", m, "real")])


def _complex_system(N: int) -> VariableSystem:
    return VariableSystem([("z", N, "complex"), ("u", N, "complex")])


def _const(system, value) -> SparsePolynomial:
    return SparsePolynomial.constant(system, value)


class Checks:
    """Accumulates (label, lhs, rhs) equality checks for one report."""

    def __init__(self):
        self.pairs = []

    def eq(self, label: str, lhs: SparsePolynomial, rhs: SparsePolynomial):
        self.pairs.append((label, lhs, rhs))

    def eq_scalar(self, label: str, system, lhs, rhs):
        self.pairs.append((label, _const(system, lhs), _const(system, rhs)))

    def true(self, label: str, cond: bool, got: str = "", want: str = ""):
        # represented as a degenerate pair so failures carry a witness
        self.pairs.append((label, cond, (got, want)))

    def report(self, ident: str, params: dict, seed: int | None = None,
               notes=None) -> VerificationReport:
        for label, lhs, rhs in self.pairs:
            if isinstance(lhs, bool):
                if not lhs:
                    got, want = rhs
                    wit = {"monomial": "1", "lhs": got, "rhs": want,
                           "check": label}
                    return VerificationReport(ident, params, FAIL, witness=wit,
                                              seed=seed,
                                              resolution_notes=list(notes or []))
                continue
            wit = first_difference(lhs, rhs)
            if wit is not None:
                wit["check"] = label
                return VerificationReport(ident, params, FAIL, witness=wit,
                                          seed=seed,
                                          resolution_notes=list(notes or []))
        return VerificationReport(ident, params, PASS, seed=seed,
                                  resolution_notes=list(notes or []))


def _seed_for(cfg: RunConfig, ident: str, params: dict) -> int:
    return derive_seed(cfg.seed, ident + json.dumps(params, sort_keys=True))


# ======================== spherical suite ============================================


def _run_gegenbauer_recurrence(params, cfg):
    ch = Checks()
    sysd = VariableSystem([("x", 1, "real")])
    for mu in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2),
               Fraction(5, 2), Fraction(7, 2)):
        for k in range(9):
            a = gegenbauer(k, mu)
            b = gegenbauer_by_recurrence(k, mu)
            ch.true(f"gegenbauer k={k} mu={mu}", a == b, repr(a), repr(b))
    # half-integer binomial convention: C(k+mu, mu) = (mu+1)_k / k!
    for k in range(6):
        lam = pochhammer(Fraction(3, 2), k) / factorial(k)
        ch.true(f"lambda_k k={k} positive", lam > 0, str(lam), "> 0")
    _ = sysd
    return ch.report("spherical.gegenbauer_recurrence", params)


def _run_jacobi_recurrence(params, cfg):
    ch = Checks()
    grid = (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2),
            Fraction(-1, 2), Fraction(3))
    for alpha in grid:
        for beta in grid:
            for nu in range(9):
                a = jacobi(nu, alpha, beta)
                b = jacobi_by_recurrence(nu, alpha, beta)
                ch.true(f"jacobi nu={nu} a={alpha} b={beta}", a == b,
                        repr(a), repr(b))
    return ch.report("complex.jacobi_recurrence", params)


def _run_jacobi_reflection(params, cfg):
    # P_nu^{a,b}(-x) = (-1)^nu P_nu^{b,a}(x), coefficientwise
    ch = Checks()
    grid = (Fraction(-1), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2))
    for alpha in grid:
        for beta in grid:
            for nu in range(7):
                a = jacobi(nu, alpha, beta)
                b = jacobi(nu, beta, alpha)
                refl = [c * ((-1) ** (nu + i)) for i, c in enumerate(a.coeffs)]
                refl += [ExactScalar(0)] * (len(b.coeffs) - len(refl))
                ok = all((b.coefficient(i) == refl[i]) if i < len(refl)
                         else (not b.coefficient(i))
                         for i in range(max(len(refl), len(b.coeffs))))
                ch.true(f"reflection nu={nu} a={alpha} b={beta}", ok,
                        repr(a), repr(b))
    return ch.report("complex.jacobi_reflection", params)


def _run_fischer_duality(params, cfg):
    m = params["m"]
    ident = "spherical.fischer_duality"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    ns = norm_sq(system, "x")
    ctx = OperatorContext(system, "x")
    ch = Checks()
    for i in range(cfg.grid.op_seeds):
        k = rng.randint(0, 3)
        P = random_poly(rng.next_u64(), real_params(m, k), "homogeneous", system, "x")
        Q = random_poly(rng.next_u64(), real_params(m, k + 2), "homogeneous", system, "x")
        lhs = fischer_form(ns * P, Q, "x")
        rhs = fischer_form(P, laplacian(Q, ctx, "real"), "x")
        ch.eq(f"duality input {i}", lhs, rhs)
    return ch.report(ident, params, seed=seed)


def _run_fischer_symmetry_positivity(params, cfg):
    m = params["m"]
    ident = "spherical.fischer_symmetry_positivity"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    ch = Checks()
    for i in range(cfg.grid.op_seeds):
        k = rng.randint(0, 3)
        P = random_poly(rng.next_u64(), real_params(m, k), "homogeneous", system, "x")
        Q = random_poly(rng.next_u64(), real_params(m, k), "homogeneous", system, "x")
        # complex rescale so conjugate symmetry is non-trivial
        P = P.scale(ExactScalar(Fraction(rng.randint(1, 3)), Fraction(rng.randint(-2, 2))))
        pq = fischer_form(P, Q, "x").constant_value()
        qp = fischer_form(Q, P, "x").constant_value()
        ch.eq_scalar(f"conjugate symmetry {i}", system, pq, qp.conjugate())
        pp = fischer_form(P, P, "x").constant_value()
        ch.true(f"positive definite {i}", (not pp.im) and pp.re > 0,
                str(pp), "positive rational")
    return ch.report(ident, params, seed=seed)


def _run_fischer_operator_vs_closed(params, cfg):
    suite = "spherical" if params["case"] == "real" else "complex"
    ident = f"{suite}.fischer_operator_vs_closed"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    ch = Checks()
    if params["case"] == "real":
        m = params["m"]
        system = _real_system(m)
        group = "x"
        for i in range(cfg.grid.op_seeds):
            k = rng.randint(0, 3)
            kq = rng.randint(0, 3)
            P = random_poly(rng.next_u64(), real_params(m, k), "homogeneous", system, group)
            Q = random_poly(rng.next_u64(), real_params(m, kq), "homogeneous", system, group)
            ch.eq(f"real closed-vs-operator {i}",
                  fischer_form(P, Q, group),
                  fischer_by_differentiation(P, Q, group))
    else:
        n = params["n"]
        system = _complex_system(n)
        group = "z"
        for i in range(cfg.grid.op_seeds):
            p, q = rng.randint(0, 2), rng.randint(0, 2)
            r, s = rng.randint(0, 2), rng.randint(0, 2)
            P = random_poly(rng.next_u64(), complex_params(n, p, q), "homogeneous", system, group)
            Q = random_poly(rng.next_u64(), complex_params(n, r, s), "homogeneous", system, group)
            P = P.scale(ExactScalar(1, Fraction(rng.randint(-2, 2))))
            ch.eq(f"complex closed-vs-operator {i}",
                  fischer_form(P, Q, group),
                  fischer_by_differentiation(P, Q, group))
    return ch.report(ident, params, seed=seed)


def _run_sphere_mean_vs_series(params, cfg):
    m = params["m"]
    ident = "spherical.sphere_mean_vs_series"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    ch = Checks()
    for i in range(cfg.grid.repro_seeds):
        P = _const(system, 0)
        for _ in range(3):
            kx = rng.randint(0, 4)
            ky = rng.randint(0, 1)
            piece = random_poly(rng.next_u64(), real_params(m, kx), "homogeneous", system, "x")
            if ky:
                piece = piece * random_poly(rng.next_u64(), real_params(m, 1),
                                            "homogeneous", system, "y")
            P = P + piece
        ch.eq(f"moment vs series {i}", sphere_mean(P, "x"), sphere_mean_series(P, "x"))
    # spec examples
    sys3 = _real_system(3)
    x1sq = SparsePolynomial.from_sid(sys3, sys3.group("x").unbarred[0])
    x1sq = x1sq * x1sq
    ch.eq("mean(1) = 1", sphere_mean(_const(sys3, 1), "x"), _const(sys3, 1))
    ch.eq("mean(x1^2) = 1/m", sphere_mean(x1sq, "x"), _const(sys3, Fraction(1, 3)))
    ch.eq("mean(x1^4) = 1/5 (m=3)", sphere_mean(x1sq * x1sq, "x"),
          _const(sys3, Fraction(1, 5)))
    return ch.report(ident, params, seed=seed)


def _run_proportionality_real(params, cfg):
    m, k = params["m"], params["k"]
    ident = "spherical.proportionality"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    c = Fraction(2 ** k) * pochhammer(Fraction(m, 2), k)
    ch = Checks()
    for i in range(cfg.grid.op_seeds):
        H = random_poly(rng.next_u64(), real_params(m, k), "harmonic", system, "x")
        P = random_poly(rng.next_u64(), real_params(m, k), "homogeneous", system, "x")
        lhs = spherical_inner(H, P, "x").constant_value() * c
        rhs = fischer_form(H, P, "x").constant_value()
        ch.eq_scalar(f"proportionality {i}", system, lhs, rhs)
        if k >= 2:
            Q = random_poly(rng.next_u64(), real_params(m, k - 2), "harmonic", system, "x")
            ch.eq_scalar(f"cross-degree spherical {i}", system,
                         spherical_inner(H, Q, "x").constant_value(), 0)
            ch.eq_scalar(f"cross-degree fischer {i}", system,
                         fischer_form(H, Q, "x").constant_value(), 0)
    return ch.report(ident, params, seed=seed)


def _run_fischer_reproduction_Z(params, cfg):
    m, k = params["m"], params["k"]
    ident = "spherical.fischer_reproduction_Z"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    Z = kernel(real_params(m, k), "Z", system, ("x", "y"))
    ch = Checks()
    for i in range(cfg.grid.repro_seeds):
        P = random_poly(rng.next_u64(), real_params(m, k), "homogeneous", system, "x")
        ch.eq(f"reproduction {i}", fischer_form(Z, P, "x"), rename_group(P, "x", "y"))
        Q = random_poly(rng.next_u64(), real_params(m, k + 1), "homogeneous", system, "x")
        ch.eq(f"degree mismatch {i}", fischer_form(Z, Q, "x"),
              SparsePolynomial.zero(system))
    return ch.report(ident, params, seed=seed)


def _run_kernel_reproduction_K(params, cfg):
    m, k, j = params["m"], params["k"], params["j"]
    ident = "spherical.kernel_reproduction_K"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    K = kernel(real_params(m, k), "K", system, ("x", "y"))
    nseeds = cfg.grid.repro_seeds if j == k else 2
    ch = Checks()
    for i in range(nseeds):
        H = random_poly(rng.next_u64(), real_params(m, j), "harmonic", system, "x")
        got = spherical_inner(K, H, "x")
        want = rename_group(H, "x", "y") if j == k else SparsePolynomial.zero(system)
        ch.eq(f"harmonic {i}", got, want)
    return ch.report(ident, params, seed=seed)


def _run_projector_annihilation_real(params, cfg):
    m, k = params["m"], params["k"]
    ident = "spherical.projector_annihilation"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    ns = norm_sq(system, "x")
    ch = Checks()
    for i in range(2):
        for j in range(k // 2 + 1):
            if dim_formulas(real_params(m, k - 2 * j), "spherical") == 0:
                continue
            H = random_poly(rng.next_u64(), real_params(m, k - 2 * j), "harmonic",
                            system, "x")
            P = power(ns, j) * H
            for ell in range(k // 2 + 1):
                want = H if ell == j else SparsePolynomial.zero(system)
                ch.eq(f"seed {i} j={j} ell={ell}",
                      proj_harmonic_real(P, "x", ell), want)
    return ch.report(ident, params, seed=seed)


def _run_projector_idempotent_real(params, cfg):
    m, k = params["m"], params["k"]
    ident = "spherical.projector_idempotent"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    ctx = OperatorContext(system, "x")
    ch = Checks()
    for i in range(cfg.grid.op_seeds):
        P = random_poly(rng.next_u64(), real_params(m, k), "homogeneous", system, "x")
        H = proj_harmonic_real(P, "x", 0)
        ch.eq(f"idempotent {i}", proj_harmonic_real(H, "x", 0), H)
        ch.eq(f"harmonic output {i}", laplacian(H, ctx, "real"),
              SparsePolynomial.zero(system))
    return ch.report(ident, params, seed=seed)


def _run_decompose_real(params, cfg):
    m, k = params["m"], params["k"]
    ident = "spherical.decompose_roundtrip"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    ctx = OperatorContext(system, "x")
    ch = Checks()
    for i in range(3):
        P = random_poly(rng.next_u64(), real_params(m, k), "homogeneous", system, "x")
        comps = decompose(P, "real", "x")
        total = _const(system, 0)
        for j, comp in enumerate(comps):
            total = total + comp
            H = proj_harmonic_real(P, "x", j)
            ch.eq(f"seed {i} component {j} harmonic part", laplacian(H, ctx, "real"),
                  SparsePolynomial.zero(system))
        ch.eq(f"seed {i} sum", total, P)
    return ch.report(ident, params, seed=seed)


def _run_dim_oracle_real(params, cfg):
    m, k = params["m"], params["k"]
    ident = "spherical.dim_formula_vs_nullspace"
    ch = Checks()
    closed = dim_formulas(real_params(m, k), "spherical")
    brute = nullspace_dim_laplacian_real(m, k)
    ch.true("closed == nullspace", closed == brute, str(closed), str(brute))
    # Fischer decomposition bookkeeping: sum_j dim H_{k-2j} = dim P_k
    total = sum(dim_formulas(real_params(m, k - 2 * j), "spherical")
                for j in range(k // 2 + 1))
    ch.true("decomposition count", total == comb(k + m - 1, m - 1),
            str(total), str(comb(k + m - 1, m - 1)))
    return ch.report(ident, params)


def _run_kernel_via_projection_real(params, cfg):
    m, k = params["m"], params["k"]
    ident = "spherical.kernel_via_projection"
    system = _real_system(m)
    K = kernel(real_params(m, k), "K", system, ("x", "y"))
    Z = kernel(real_params(m, k), "Z", system, ("x", "y"))
    c = Fraction(2 ** k) * pochhammer(Fraction(m, 2), k)
    ch = Checks()
    ch.eq("K = c_k Proj_0(Z)", K, proj_harmonic_real(Z, "x", 0).scale(c))
    return ch.report(ident, params)


def _run_rotation_invariance(params, cfg):
    m, k = params["m"], params["k"]
    ident = "spherical.kernel_rotation_invariance"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _real_system(m)
    K = kernel(real_params(m, k), "K", system, ("x", "y"))
    ch = Checks()
    for i in range(2):
        R = cayley_rotation(m, rng)
        ch.eq(f"rotation {i}", rotate_group(rotate_group(K, "x", R), "y", R), K)
    return ch.report(ident, params, seed=seed)


# ======================== complex suite ==============================================


def _run_euler_laplacian_conventions(params, cfg):
    n = params["n"]
    ident = "complex.euler_laplacian_conventions"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _complex_system(n)
    ctx = OperatorContext(system, "z")
    ch = Checks()
    for i in range(cfg.grid.op_seeds):
        p, q = rng.randint(0, 3), rng.randint(0, 3)
        P = random_poly(rng.next_u64(), complex_params(n, p, q), "homogeneous",
                        system, "z")
        ch.eq(f"4*Delta_z = Delta {i}", laplacian(P, ctx, "complex").scale(4),
              laplacian(P, ctx, "real"))
        ch.eq(f"euler split {i}",
              euler(P, ctx, "holomorphic") + euler(P, ctx, "antiholomorphic"),
              euler(P, ctx, "full"))
        ch.eq(f"euler z eigenvalue {i}", euler(P, ctx, "holomorphic"), P.scale(p))
        ch.eq(f"euler zbar eigenvalue {i}", euler(P, ctx, "antiholomorphic"),
              P.scale(q))
    return ch.report(ident, params, seed=seed)


def _run_proportionality_complex(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "complex.proportionality"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _complex_system(n)
    c = pochhammer(n, p + q)
    ch = Checks()
    for i in range(cfg.grid.op_seeds):
        H = random_poly(rng.next_u64(), complex_params(n, p, q), "harmonic",
                        system, "z")
        P = random_poly(rng.next_u64(), complex_params(n, p, q), "homogeneous",
                        system, "z")
        lhs = spherical_inner(H, P, "z").constant_value() * c
        rhs = fischer_form(H, P, "z").constant_value()
        ch.eq_scalar(f"proportionality {i}", system, lhs, rhs)
        if p >= 1 and q >= 1:
            Q = random_poly(rng.next_u64(), complex_params(n, p - 1, q - 1),
                            "harmonic", system, "z")
            ch.eq_scalar(f"cross-degree spherical {i}", system,
                         spherical_inner(H, Q, "z").constant_value(), 0)
            ch.eq_scalar(f"cross-degree fischer {i}", system,
                         fischer_form(H, Q, "z").constant_value(), 0)
    return ch.report(ident, params, seed=seed)


def _run_fischer_reproduction_Z_complex(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "complex.fischer_reproduction_Z"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _complex_system(n)
    Z = kernel(complex_params(n, p, q), "Z", system, ("z", "u"))
    ch = Checks()
    for i in range(cfg.grid.repro_seeds):
        P = random_poly(rng.next_u64(), complex_params(n, p, q), "homogeneous",
                        system, "z")
        ch.eq(f"reproduction {i}", fischer_form(Z, P, "z"),
              rename_group(P, "z", "u"))
        Q = random_poly(rng.next_u64(), complex_params(n, p + 1, q), "homogeneous",
                        system, "z")
        ch.eq(f"bidegree mismatch {i}", fischer_form(Z, Q, "z"),
              SparsePolynomial.zero(system))
    return ch.report(ident, params, seed=seed)


def _run_kernel_reproduction_K_complex(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "complex.kernel_reproduction_K"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _complex_system(n)
    K = kernel(complex_params(n, p, q), "K", system, ("z", "u"))
    ch = Checks()
    for i in range(cfg.grid.repro_seeds):
        H = random_poly(rng.next_u64(), complex_params(n, p, q), "harmonic",
                        system, "z")
        ch.eq(f"diagonal {i}", spherical_inner(K, H, "z"),
              rename_group(H, "z", "u"))
    # cross-degree zero cases along the radial tower (r-s = p-q)
    for d in (-2, -1, 1, 2):
        r, s = p + d, q + d
        if r < 0 or s < 0 or max(r, s) > cfg.grid.complex_degmax:
            continue
        if dim_formulas(complex_params(n, r, s), "complex_bidegree") == 0:
            continue
        for i in range(2):
            H = random_poly(rng.next_u64(), complex_params(n, r, s), "harmonic",
                            system, "z")
            ch.eq(f"cross ({r},{s}) {i}", spherical_inner(K, H, "z"),
                  SparsePolynomial.zero(system))
    return ch.report(ident, params, seed=seed)


def _run_projector_annihilation_complex(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "complex.projector_annihilation"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _complex_system(n)
    ns = norm_sq(system, "z")
    nu = min(p, q)
    ch = Checks()
    for i in range(2):
        for j in range(nu + 1):
            if dim_formulas(complex_params(n, p - j, q - j), "complex_bidegree") == 0:
                continue
            H = random_poly(rng.next_u64(), complex_params(n, p - j, q - j),
                            "harmonic", system, "z")
            P = power(ns, j) * H
            for ell in range(nu + 1):
                want = H if ell == j else SparsePolynomial.zero(system)
                ch.eq(f"seed {i} j={j} ell={ell}",
                      proj_harmonic_complex(P, "z", ell), want)
    return ch.report(ident, params, seed=seed)


def _run_decompose_complex(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "complex.decompose_roundtrip"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _complex_system(n)
    ctx = OperatorContext(system, "z")
    ch = Checks()
    for i in range(3):
        P = random_poly(rng.next_u64(), complex_params(n, p, q), "homogeneous",
                        system, "z")
        comps = decompose(P, "complex", "z")
        total = _const(system, 0)
        for j, comp in enumerate(comps):
            total = total + comp
            H = proj_harmonic_complex(P, "z", j)
            ch.eq(f"seed {i} component {j} harmonic", laplacian(H, ctx, "complex"),
                  SparsePolynomial.zero(system))
        ch.eq(f"seed {i} sum", total, P)
    return ch.report(ident, params, seed=seed)


def _run_dim_oracle_complex(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "complex.dim_formula_vs_nullspace"
    ch = Checks()
    closed = dim_formulas(complex_params(n, p, q), "complex_bidegree")
    brute = nullspace_dim_laplacian_complex(n, p, q)
    ch.true("closed == nullspace", closed == brute, str(closed), str(brute))
    total = sum(dim_formulas(complex_params(n, p - j, q - j), "complex_bidegree")
                for j in range(min(p, q) + 1))
    ch.true("decomposition count", total == dim_bidegree_space(n, p, q),
            str(total), str(dim_bidegree_space(n, p, q)))
    return ch.report(ident, params)


def _run_kernel_via_projection_complex(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "complex.kernel_via_projection"
    system = _complex_system(n)
    pr = complex_params(n, p, q)
    K = kernel(pr, "K", system, ("z", "u"))
    Z = kernel(pr, "Z", system, ("z", "u"))
    ch = Checks()
    ch.eq("K = (n)_{p+q} Proj_0(Z)", K,
          proj_harmonic_complex(Z, "z", 0).scale(pochhammer(n, p + q)))
    return ch.report(ident, params)


def _run_hermitian_symmetry(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "complex.kernel_hermitian_symmetry"
    system = _complex_system(n)
    K = kernel(complex_params(n, p, q), "K", system, ("z", "u"))
    ch = Checks()
    ch.eq("conj(K) = K with z,u swapped", conjugate(K), swap_groups(K, "z", "u"))
    return ch.report(ident, params)


# ======================== symplectic suite ===========================================


def _symp_system(n: int) -> VariableSystem:
    return _complex_system(2 * n)


def _random_bidegree(rng: Rng, n: int, system, pmax=3, qmax=3):
    p, q = rng.randint(0, pmax), rng.randint(0, qmax)
    P = random_poly(rng.next_u64(), complex_params(2 * n, p, q), "homogeneous",
                    system, "z")
    return P, p, q


def _run_sl2_commutators(params, cfg):
    n = params["n"]
    ident = "symplectic.sl2_commutators"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _symp_system(n)
    ctx = OperatorContext(system, "z")

    def comm(op1, op2, P):
        return op1(op2(P)) - op2(op1(P))

    def h_op(P):
        return euler(P, ctx, "antiholomorphic") - euler(P, ctx, "holomorphic")

    def e_op(P):
        return twist(P, ctx, "E")

    def f_op(P):
        return twist(P, ctx, "Edag")

    ch = Checks()
    for i in range(cfg.grid.op_seeds):
        P, p, q = _random_bidegree(rng, n, system)
        ch.eq(f"[H,Edag]=2Edag {i}", comm(h_op, f_op, P), f_op(P).scale(2))
        ch.eq(f"[H,E]=-2E {i}", comm(h_op, e_op, P), e_op(P).scale(-2))
        ch.eq(f"[Edag,E]=H {i}", comm(f_op, e_op, P), h_op(P))
        # bidegree shifts
        EP = e_op(P)
        if not EP.is_zero:
            ch.true(f"E shifts bidegree {i}",
                    degree_profile(EP, "z") == (p + 1, q - 1),
                    str(degree_profile(EP, "z")), str((p + 1, q - 1)))
    return ch.report(ident, params, seed=seed)


def _run_symplectic_atoms(params, cfg):
    n = params["n"]
    ident = "symplectic.atoms"
    system = _symp_system(n)
    ctx = OperatorContext(system, "z")
    at = BilinearAtoms.build(system, "z", "u")
    zero = SparsePolynomial.zero(system)
    ch = Checks()
    ch.eq("E(Abar) = C", twist(at.Abar, ctx, "E"), at.C)
    ch.eq("Edag(C) = Abar", twist(at.C, ctx, "Edag"), at.Abar)
    ch.eq("Edag(A) = -Cbar", twist(at.A, ctx, "Edag"), -at.Cbar)
    ch.eq("E(Cbar) = -A", twist(at.Cbar, ctx, "E"), -at.A)
    ch.eq("Edag(Abar) = 0", twist(at.Abar, ctx, "Edag"), zero)
    ch.eq("Edag(Cbar) = 0", twist(at.Cbar, ctx, "Edag"), zero)
    ch.eq("E(A) = 0", twist(at.A, ctx, "E"), zero)
    ch.eq("E(C) = 0", twist(at.C, ctx, "E"), zero)
    ch.eq("C antisymmetric", swap_groups(at.C, "z", "u"), -at.C)
    ch.eq("quat = A Abar + C Cbar", at.quat_modsq, at.A * at.Abar + at.C * at.Cbar)
    ch.eq("quat self-conjugate", conjugate(at.quat_modsq), at.quat_modsq)
    if n == 1:
        ch.eq("n=1 multiplicativity", at.quat_modsq, at.normsq_z * at.normsq_u)
    return ch.report(ident, params)


def _run_commute_norm_laplacian(params, cfg):
    n = params["n"]
    ident = "symplectic.commute_norm_laplacian"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _symp_system(n)
    ctx = OperatorContext(system, "z")
    ns = norm_sq(system, "z")
    ch = Checks()
    for i in range(cfg.grid.op_seeds):
        P, _, _ = _random_bidegree(rng, n, system)
        for variant in ("E", "Edag"):
            ch.eq(f"{variant} commutes with ||z||^2 ({i})",
                  twist(ns * P, ctx, variant), ns * twist(P, ctx, variant))
            ch.eq(f"{variant} commutes with Delta_z ({i})",
                  twist(laplacian(P, ctx, "complex"), ctx, variant),
                  laplacian(twist(P, ctx, variant), ctx, "complex"))
    return ch.report(ident, params, seed=seed)


def _run_mirror_conjugation(params, cfg):
    n = params["n"]
    ident = "symplectic.mirror_conjugation"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _symp_system(n)
    ch = Checks()
    for i in range(cfg.grid.repro_seeds):
        q = rng.randint(0, 2)
        p = rng.randint(q, 3)  # p >= q for the E orientation
        P = random_poly(rng.next_u64(), complex_params(2 * n, p, q), "homogeneous",
                        system, "z")
        lhs = proj_symplectic(P, "z", "E")
        rhs = conjugate(proj_symplectic(conjugate(P), "z", "Edag"))
        ch.eq(f"mirror {i}", lhs, rhs)
    return ch.report(ident, params, seed=seed)


def _run_kappa_relations(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.kappa_relations"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _symp_system(n)
    ctx = OperatorContext(system, "z")
    ch = Checks()
    for i in range(3):
        R = random_poly(rng.next_u64(), symplectic_params(n, p, q), "symplectic",
                        system, "z")
        for a in range(4):
            for b in range(4):
                lhs = R
                for _ in range(b):
                    lhs = twist(lhs, ctx, "E")
                for _ in range(a):
                    lhs = twist(lhs, ctx, "Edag")
                if a > b:
                    rhs = SparsePolynomial.zero(system)
                else:
                    kappa = (Fraction(factorial(b), factorial(b - a))
                             * pochhammer(q - p - b + 1, a))
                    rhs = R
                    for _ in range(b - a):
                        rhs = twist(rhs, ctx, "E")
                    rhs = rhs.scale(kappa)
                ch.eq(f"seed {i} a={a} b={b}", lhs, rhs)
    return ch.report(ident, params, seed=seed)


def _run_projector_annihilation_symp(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.projector_annihilation"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _symp_system(n)
    ctx = OperatorContext(system, "z")
    ch = Checks()
    for i in range(2):
        for j in range(min(p, q) + 1):
            if dim_formulas(symplectic_params(n, p - j, q + j), "symplectic_R") == 0:
                continue
            R = random_poly(rng.next_u64(), symplectic_params(n, p - j, q + j),
                            "symplectic", system, "z")
            P = R
            for _ in range(j):
                P = twist(P, ctx, "E")
            want = R if j == 0 else SparsePolynomial.zero(system)
            ch.eq(f"seed {i} j={j}", proj_symplectic(P, "z", "Edag"), want)
    return ch.report(ident, params, seed=seed)


def _run_projector_idempotent_symp(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.projector_idempotent"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _symp_system(n)
    ctx = OperatorContext(system, "z")
    ch = Checks()
    for i in range(cfg.grid.op_seeds):
        P = random_poly(rng.next_u64(), complex_params(2 * n, p, q), "homogeneous",
                        system, "z")
        R = proj_symplectic(P, "z", "Edag")
        ch.eq(f"idempotent {i}", proj_symplectic(R, "z", "Edag"), R)
        ch.eq(f"lands in ker Edag {i}", twist(R, ctx, "Edag"),
              SparsePolynomial.zero(system))
    return ch.report(ident, params, seed=seed)


def _run_proj_commute(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.proj_commute"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _symp_system(n)
    ch = Checks()
    for i in range(3):
        P = random_poly(rng.next_u64(), complex_params(2 * n, p, q), "homogeneous",
                        system, "z")
        a = proj_harmonic_complex(proj_symplectic(P, "z", "Edag"), "z", 0)
        b = proj_symplectic(proj_harmonic_complex(P, "z", 0), "z", "Edag")
        ch.eq(f"commute {i}", a, b)
    Z = kernel(complex_params(2 * n, p, q), "Z", system, ("z", "u"))
    a = proj_harmonic_complex(proj_symplectic(Z, "z", "Edag"), "z", 0)
    b = proj_symplectic(proj_harmonic_complex(Z, "z", 0), "z", "Edag")
    ch.eq("commute on Z", a, b)
    return ch.report(ident, params, seed=seed)


def _run_fischer_reproduction_ZS(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.fischer_reproduction_ZS"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _symp_system(n)
    ctx = OperatorContext(system, "z")
    ZS = kernel(symplectic_params(n, p, q), "ZS", system, ("z", "u"))
    ch = Checks()
    for i in range(cfg.grid.repro_seeds):
        for k_shift in range(min(p, 2) + 1):
            pr, qr = p - k_shift, q + k_shift
            if dim_formulas(symplectic_params(n, pr, qr), "symplectic_R") == 0:
                continue
            R = random_poly(rng.next_u64(), symplectic_params(n, pr, qr),
                            "symplectic", system, "z")
            P = R
            for _ in range(k_shift):
                P = twist(P, ctx, "E")
            got = fischer_form(ZS, P, "z")
            want = (rename_group(P, "z", "u") if k_shift == 0
                    else SparsePolynomial.zero(system))
            ch.eq(f"seed {i} k={k_shift}", got, want)
    return ch.report(ident, params, seed=seed)


def _run_kernel_reproduction_KS(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.kernel_reproduction_KS"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = _symp_system(n)
    ctx = OperatorContext(system, "z")
    ns = norm_sq(system, "z")
    KS = kernel(symplectic_params(n, p, q), "KS", system, ("z", "u"))
    notes = []
    ch = Checks()
    if dim_formulas(symplectic_params(n, p, q), "symplectic_HS") == 0:
        notes.append("zero-dimensional target: kernel must vanish identically")
        ch.eq("kernel vanishes", KS, SparsePolynomial.zero(system))
        return ch.report(ident, params, seed=seed, notes=notes)
    for i in range(cfg.grid.repro_seeds):
        H = random_poly(rng.next_u64(), symplectic_params(n, p, q),
                        "symplectic_harmonic", system, "z")
        ch.eq(f"diagonal {i}", spherical_inner(KS, H, "z"),
              rename_group(H, "z", "u"))
    for j in range(p + 1):
        for k_shift in range(p - j + 1):
            if j == 0 and k_shift == 0:
                continue
            pr, qr = p - j - k_shift, q - j + k_shift
            if pr < 0 or pr > qr:
                continue
            if dim_formulas(symplectic_params(n, pr, qr), "symplectic_HS") == 0:
                continue
            for i in range(2):
                H = random_poly(rng.next_u64(), symplectic_params(n, pr, qr),
                                "symplectic_harmonic", system, "z")
                P = H
                for _ in range(k_shift):
                    P = twist(P, ctx, "E")
                P = power(ns, j) * P
                ch.eq(f"annihilation j={j} k={k_shift} {i}",
                      spherical_inner(KS, P, "z"), SparsePolynomial.zero(system))
    return ch.report(ident, params, seed=seed, notes=notes)


def _run_laplacian_ladder(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.laplacian_ladder"
    system = _symp_system(n)
    ctx = OperatorContext(system, "z")
    ZS = kernel(symplectic_params(n, p, q), "ZS", system, ("z", "u"))
    ch = Checks()
    if p >= 1 and q >= 1:
        lower = kernel(symplectic_params(n, p - 1, q - 1), "ZS", system, ("z", "u"))
        want = norm_sq(system, "u") * lower
    else:
        want = SparsePolynomial.zero(system)
    ch.eq("Delta_z ZS = ||u||^2 ZS_lower", laplacian(ZS, ctx, "complex"), want)
    return ch.report(ident, params)


def _run_ZS_via_projection(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.ZS_via_projection"
    system = _symp_system(n)
    Z = kernel(complex_params(2 * n, p, q), "Z", system, ("z", "u"))
    ZS = kernel(symplectic_params(n, p, q), "ZS", system, ("z", "u"))
    ch = Checks()
    ch.eq("ZS = Proj_Edag(Z)", ZS, proj_symplectic(Z, "z", "Edag"))
    return ch.report(ident, params)


def _run_KS_via_projection(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.KS_via_projection"
    system = _symp_system(n)
    ZS = kernel(symplectic_params(n, p, q), "ZS", system, ("z", "u"))
    KS = kernel(symplectic_params(n, p, q), "KS", system, ("z", "u"))
    ch = Checks()
    ch.eq("KS = (2n)_{p+q} Proj_0(ZS)", KS,
          proj_harmonic_complex(ZS, "z", 0).scale(pochhammer(2 * n, p + q)))
    return ch.report(ident, params)


def _run_dim_oracle_symplectic(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.dim_formula_vs_nullspace"
    N = 2 * n
    ch = Checks()
    closed_R = dim_formulas(symplectic_params(n, p, q), "symplectic_R")
    ch.true("R closed == nullspace", closed_R == nullspace_dim_symplectic_R(N, p, q),
            str(closed_R), str(nullspace_dim_symplectic_R(N, p, q)))
    closed_HS = dim_formulas(symplectic_params(n, p, q), "symplectic_HS")
    ch.true("HS closed == joint nullspace",
            closed_HS == nullspace_dim_symplectic_HS(N, p, q),
            str(closed_HS), str(nullspace_dim_symplectic_HS(N, p, q)))
    return ch.report(ident, params)


def _run_dim_bookkeeping_symplectic(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.dim_bookkeeping"
    N = 2 * n
    ch = Checks()
    total = sum(dim_formulas(symplectic_params(n, p - j, q + j), "symplectic_R")
                for j in range(p + 1))
    ch.true("P = sum E^j R", total == dim_bidegree_space(N, p, q),
            str(total), str(dim_bidegree_space(N, p, q)))
    totalH = sum(dim_formulas(symplectic_params(n, p - j, q + j), "symplectic_HS")
                 for j in range(p + 1))
    dimH = dim_formulas(complex_params(N, p, q), "complex_bidegree")
    ch.true("H = sum E^j HS", totalH == dimH, str(totalH), str(dimH))
    totalR = sum(dim_formulas(symplectic_params(n, p - j, q - j), "symplectic_HS")
                 for j in range(min(p, q) + 1))
    dimR = dim_formulas(symplectic_params(n, p, q), "symplectic_R")
    ch.true("R = sum r^2j HS", totalR == dimR, str(totalR), str(dimR))
    return ch.report(ident, params)


def _run_kernel_zero_iff_dim_zero(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "symplectic.kernel_zero_iff_dim_zero"
    system = _symp_system(n)
    KS = kernel(symplectic_params(n, p, q), "KS", system, ("z", "u"))
    dim = dim_formulas(symplectic_params(n, p, q), "symplectic_HS")
    ch = Checks()
    ch.true("KS == 0 iff dim HS == 0", KS.is_zero == (dim == 0),
            f"kernel zero: {KS.is_zero}", f"dim: {dim}")
    return ch.report(ident, params)


# ======================== pizzetti suite =============================================


def _lemma_feasible(params: KernelParams) -> bool:
    if params.case == "real":
        half = comb(2 * params.m + params.k - 1, params.k)
        return half * half <= LEMMA_PAIR_BUDGET
    N = params.complex_dim
    p, q = params.p, params.q
    half = comb(2 * N + p - 1, p) * comb(2 * N + q - 1, q)
    return half * half <= LEMMA_PAIR_BUDGET


def _run_action_lemma_real(params, cfg):
    m, k = params["m"], params["k"]
    ident = "pizzetti.action_lemma_real"
    pr = real_params(m, k)
    try:
        cfg.caps.check_terms(comb(2 * m + k - 1, k) ** 2, "lemma integrand pairs")
        wave = plane_wave(pr, cfg.caps)
        norm = Fraction(1, factorial(k) ** 2)
        f_k = (wave.half_z * wave.half_u).scale(norm)
        xy = real_inner(wave.system, "x", "y")
        nsx = norm_sq(wave.system, "x")
        nsy = norm_sq(wave.system, "y")
        ch = Checks()
        if k >= 1:
            lower = plane_wave(real_params(m, k - 1), cfg.caps)
            f_k1 = (lower.half_z * lower.half_u).scale(
                Fraction(1, factorial(k - 1) ** 2))
            f_k1 = _transplant(f_k1, wave.system)
            ch.eq("I1(f_k) = 4<x,y> f_{k-1}", apply_I(f_k, wave.ctx, "I1"),
                  (xy * f_k1).scale(4))
        else:
            ch.eq("I1(f_0) = 0", apply_I(f_k, wave.ctx, "I1"),
                  SparsePolynomial.zero(wave.system))
        if k >= 2:
            lower2 = plane_wave(real_params(m, k - 2), cfg.caps)
            f_k2 = (lower2.half_z * lower2.half_u).scale(
                Fraction(1, factorial(k - 2) ** 2))
            f_k2 = _transplant(f_k2, wave.system)
            want = ((xy * xy - nsx * nsy) * f_k2).scale(4)
            ch.eq("I2(f_k) = 4(<x,y>^2-|x|^2|y|^2) f_{k-2}",
                  apply_I(f_k, wave.ctx, "I2"), want)
        else:
            ch.eq("I2(f_k) = 0 (k<2)", apply_I(f_k, wave.ctx, "I2"),
                  SparsePolynomial.zero(wave.system))
        return ch.report(ident, params)
    except CapExceeded as exc:
        return VerificationReport(ident, params, SKIPPED,
                                  resolution_notes=[f"cap:{exc.cap}", exc.detail])


def _transplant(P: SparsePolynomial, system: VariableSystem) -> SparsePolynomial:
    """Move a polynomial between structurally equal systems."""
    if P.system == system:
        return SparsePolynomial(system, P.terms, _normalized=True)
    raise CapExceeded("system", "transplant between unequal systems")


def _run_action_lemma_complex(params, cfg):
    n, p, q = params["n"], params["p"], params["q"]
    ident = "pizzetti.action_lemma_complex"
    pr = complex_params(n, p, q)

    def normalized_wave(pp, qq, system=None):
        w = plane_wave(complex_params(n, pp, qq), cfg.caps)
        f = (w.half_z * w.half_u).scale(
            Fraction(1, (factorial(pp) * factorial(qq)) ** 2))
        return (w, f if system is None else _transplant(f, system))

    try:
        half = comb(2 * n + p - 1, p) * comb(2 * n + q - 1, q)
        cfg.caps.check_terms(half * half, "lemma integrand pairs")
        wave, f_pq = normalized_wave(p, q)
        system = wave.system
        A = hermitian_pair(system, "z", "u")
        Abar = conjugate(A)
        nsz = norm_sq(system, "z")
        nsu = norm_sq(system, "u")
        ch = Checks()
        want = SparsePolynomial.zero(system)
        if p >= 1:
            _, f1 = normalized_wave(p - 1, q, system)
            want = want + (A * f1).scale(8)
        if q >= 1:
            _, f2 = normalized_wave(p, q - 1, system)
            want = want + (Abar * f2).scale(8)
        ch.eq("I1(f_pq) = 8(A f_{p-1,q} + Abar f_{p,q-1})",
              apply_I(f_pq, wave.ctx, "I1"), want)
        if p >= 1 and q >= 1:
            _, f3 = normalized_wave(p - 1, q - 1, system)
            want2 = ((A * Abar - nsz * nsu) * f3).scale(64)
        else:
            want2 = SparsePolynomial.zero(system)
        ch.eq("I2(f_pq) = 64(|A|^2-|z|^2|u|^2) f_{p-1,q-1}",
              apply_I(f_pq, wave.ctx, "I2"), want2)
        return ch.report(ident, params)
    except CapExceeded as exc:
        return VerificationReport(ident, params, SKIPPED,
                                  resolution_notes=[f"cap:{exc.cap}", exc.detail])


def _run_degree_selection(params, cfg):
    m, k = params["m"], params["k"]
    ident = "pizzetti.degree_selection"
    wave = plane_wave(real_params(m, k), cfg.caps)
    f = wave.half_z * wave.half_u
    contribs = stiefel_jl_contributions(f, wave.ctx, by_operators=True)
    ch = Checks()
    zero = SparsePolynomial.zero(wave.system)
    nonzero_js = set()
    for (j, l), piece in sorted(contribs.items()):
        if not piece.is_zero:
            nonzero_js.add(j)
    ch.true("only j=k survives", nonzero_js <= {k},
            str(sorted(nonzero_js)), str([k]))
    total = zero
    for piece in contribs.values():
        total = total + piece
    ch.eq("contributions sum to the mean", total, stiefel_mean(f, wave.ctx))
    return ch.report(ident, params)


def _run_sphere_consistency(params, cfg):
    m = params["m"]
    ident = "pizzetti.sphere_consistency"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = VariableSystem([("x", m, "real"), ("y", m, "real"),
                             ("s", m, "real"), ("t", m, "real")])
    ctx = StiefelContext(ST1, system, "s", "t")
    ch = Checks()
    for i in range(cfg.grid.repro_seeds):
        deg = rng.randint(0, 4)
        f = random_poly(rng.next_u64(), real_params(m, deg), "homogeneous",
                        system, "t")
        f = f * random_poly(rng.next_u64(), real_params(m, 1), "homogeneous",
                            system, "x")
        ch.eq(f"s-independent integrand {i}", stiefel_mean(f, ctx),
              sphere_mean(f, "t"))
    return ch.report(ident, params, seed=seed)


def _run_swap_symmetry(params, cfg):
    m, k = params["m"], params["k"]
    ident = "pizzetti.swap_symmetry"
    wave = plane_wave(real_params(m, k), cfg.caps)
    mean = stiefel_mean_product(wave.half_z, wave.half_u, wave.ctx, cfg.caps)
    ch = Checks()
    ch.eq("mean symmetric under x<->y", mean, swap_groups(mean, "x", "y"))
    return ch.report(ident, params)


def _run_I2_complex_vs_realJ(params, cfg):
    n = params["n"]
    ident = "pizzetti.I2_complex_vs_realJ"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    system = VariableSystem([("s", n, "complex"), ("t", n, "complex"),
                             ("w", 2 * n, "real"), ("v", 2 * n, "real")])
    ctx = StiefelContext(ST2, system, "s", "t")
    pairs = (("s", "w"), ("t", "v"))
    cw = OperatorContext(system, "w")
    cv = OperatorContext(system, "v")

    def i2_real(h):
        out = laplacian(laplacian(h, cw, "real"), cv, "real")
        out = out - grad_pair(grad_pair(h, "w", "v", "real"), "w", "v", "real")
        out = out - grad_pair_J(grad_pair_J(h, "w", "v"), "w", "v")
        return out

    ch = Checks()
    for i in range(3):
        fs = random_poly(rng.next_u64(), complex_params(n, 1, 1), "homogeneous",
                         system, "s")
        ft = random_poly(rng.next_u64(), complex_params(n, 1, 1), "homogeneous",
                         system, "t")
        f = fs * ft
        lhs = realify(apply_I(f, ctx, "I2"), pairs)
        rhs = i2_real(realify(f, pairs))
        ch.eq(f"I2 complex vs real J form {i}", lhs, rhs)
        lhs1 = realify(apply_I(f, ctx, "I1"), pairs)
        rhs1 = laplacian(realify(f, pairs), cw, "real") \
            + laplacian(realify(f, pairs), cv, "real")
        ch.eq(f"I1 complex vs real form {i}", lhs1, rhs1)
    return ch.report(ident, params, seed=seed)


def _run_mean_table_vs_operators(params, cfg):
    ident = "pizzetti.mean_table_vs_operators"
    seed = _seed_for(cfg, ident, params)
    rng = Rng(seed)
    ch = Checks()
    if params["case"] == "real":
        m = params["m"]
        system = VariableSystem([("x", m, "real"), ("s", m, "real"),
                                 ("t", m, "real")])
        ctx = StiefelContext(ST1, system, "s", "t")
        for i in range(3):
            f = random_poly(rng.next_u64(), real_params(m, rng.randint(0, 3)),
                            "homogeneous", system, "s")
            f = f * random_poly(rng.next_u64(), real_params(m, rng.randint(0, 2)),
                                "homogeneous", system, "t")
            f = f + random_poly(rng.next_u64(), real_params(m, 1), "homogeneous",
                                system, "x")
            ch.eq(f"St1 table vs operators {i}", stiefel_mean(f, ctx),
                  stiefel_mean_by_operators(f, ctx))
            g = random_poly(rng.next_u64(), real_params(m, 2), "homogeneous",
                            system, "t")
            ch.eq(f"St1 product path {i}",
                  stiefel_mean_product(f, g, ctx, cfg.caps),
                  stiefel_mean(f * g, ctx))
    else:
        n = params["n"]
        system = VariableSystem([("z", n, "complex"), ("s", n, "complex"),
                                 ("t", n, "complex")])
        ctx = StiefelContext(ST2, system, "s", "t")
        for i in range(3):
            f = random_poly(rng.next_u64(), complex_params(n, 1, 1), "homogeneous",
                            system, "s")
            f = f * random_poly(rng.next_u64(),
                                complex_params(n, rng.randint(0, 1), 1),
                                "homogeneous", system, "t")
            f = f + random_poly(rng.next_u64(), complex_params(n, 1, 0),
                                "homogeneous", system, "z")
            ch.eq(f"St2 table vs operators {i}", stiefel_mean(f, ctx),
                  stiefel_mean_by_operators(f, ctx))
            g = random_poly(rng.next_u64(), complex_params(n, 1, 1), "homogeneous",
                            system, "t")
            ch.eq(f"St2 product path {i}",
                  stiefel_mean_product(f, g, ctx, cfg.caps),
                  stiefel_mean(f * g, ctx))
    return ch.report(ident, params, seed=seed)


# ======================== planewave suite ============================================


def _run_planewave(params, cfg):
    case = params["case"]
    if case == "real":
        pr = real_params(params["m"], params["k"])
    elif case == "complex":
        pr = complex_params(params["n"], params["p"], params["q"])
    else:
        pr = symplectic_params(params["n"], params["p"], params["q"])
    seed = _seed_for(cfg, "planewave." + case, params)
    return verify_planewave(pr, caps=cfg.caps, seed=seed)


# ======================== registry ===================================================


def _g_real_m(cfg):
    return [{"case": "real", "m": m} for m in cfg.grid.real_m]


def _g_real_mk(cfg, kmax=None, kmin=0):
    out = []
    for m in cfg.grid.real_m:
        ks = cfg.grid.real_ks() if kmax is None else [
            k for k in range(kmin, kmax + 1)
            if cfg.grid.k_exact is None or k == cfg.grid.k_exact]
        for k in ks:
            out.append({"case": "real", "m": m, "k": k})
    return out


def _g_real_kernel_pairs(cfg):
    out = []
    for m in cfg.grid.real_m:
        for k in cfg.grid.real_ks():
            for j in range(cfg.grid.real_kmax + 1):
                out.append({"case": "real", "m": m, "k": k, "j": j})
    return out


def _g_complex_n(cfg):
    return [{"case": "complex", "n": n} for n in cfg.grid.complex_n]


def _g_complex_npq(cfg, degmax=None):
    out = []
    for n in cfg.grid.complex_n:
        if degmax is None:
            pqs = cfg.grid.complex_pqs()
        else:
            pqs = [(p, q) for p in range(degmax + 1) for q in range(degmax + 1)
                   if (cfg.grid.p_exact is None or p == cfg.grid.p_exact)
                   and (cfg.grid.q_exact is None or q == cfg.grid.q_exact)]
        for p, q in pqs:
            out.append({"case": "complex", "n": n, "p": p, "q": q})
    return out


def _g_symp_n(cfg):
    return [{"case": "symplectic", "n": n} for n in cfg.grid.symp_n]


def _g_symp_npq(cfg):
    out = []
    for n in cfg.grid.symp_n:
        for p, q in cfg.grid.symp_pqs(n):
            out.append({"case": "symplectic", "n": n, "p": p, "q": q})
    return out


def _g_symp_npq_deg3(cfg):
    out = []
    for n in cfg.grid.symp_n:
        for p in range(4):
            for q in range(p, 4):
                if cfg.grid.p_exact is not None and p != cfg.grid.p_exact:
                    continue
                if cfg.grid.q_exact is not None and q != cfg.grid.q_exact:
                    continue
                out.append({"case": "symplectic", "n": n, "p": p, "q": q})
    return out


def _g_kappa(cfg):
    out = []
    for n in cfg.grid.symp_n:
        for p, q in ((0, 0), (0, 1), (1, 1), (1, 2)):
            out.append({"case": "symplectic", "n": n, "p": p, "q": q})
    return out


def _g_lemma_real(cfg):
    out = []
    for m in cfg.grid.real_m:
        for k in range(cfg.grid.lemma_kmax + 1):
            if cfg.grid.k_exact is not None and k != cfg.grid.k_exact:
                continue
            if _lemma_feasible(real_params(m, k)):
                out.append({"case": "real", "m": m, "k": k})
    return out


def _g_lemma_complex(cfg):
    out = []
    for n in cfg.grid.complex_n:
        for p in range(cfg.grid.lemma_degmax + 1):
            for q in range(cfg.grid.lemma_degmax + 1):
                if cfg.grid.p_exact is not None and p != cfg.grid.p_exact:
                    continue
                if cfg.grid.q_exact is not None and q != cfg.grid.q_exact:
                    continue
                if _lemma_feasible(complex_params(n, p, q)):
                    out.append({"case": "complex", "n": n, "p": p, "q": q})
    return out


def _g_degree_selection(cfg):
    m = min(cfg.grid.real_m)
    return [{"case": "real", "m": m, "k": k} for k in range(4)
            if cfg.grid.k_exact is None or k == cfg.grid.k_exact]


def _g_mean_paths(cfg):
    out = [{"case": "real", "m": m} for m in cfg.grid.real_m[:2]]
    out += [{"case": "complex", "n": n} for n in cfg.grid.complex_n[:2]]
    return out


def _g_single_real(cfg):
    return [{"case": "real"}]


def _g_single_complex(cfg):
    return [{"case": "complex"}]


def _g_planewave(cfg):
    out = [{"case": "real", "m": m, "k": k}
           for m in cfg.grid.real_m for k in cfg.grid.real_ks()]
    out += _g_complex_npq(cfg)
    out += _g_symp_npq(cfg)
    return out


IDENTITIES = {
    # spherical
    "spherical.gegenbauer_recurrence": ("spherical", _g_single_real, _run_gegenbauer_recurrence),
    "spherical.fischer_duality": ("spherical", _g_real_m, _run_fischer_duality),
    "spherical.fischer_symmetry_positivity": ("spherical", _g_real_m, _run_fischer_symmetry_positivity),
    "spherical.fischer_operator_vs_closed": ("spherical", _g_real_m, _run_fischer_operator_vs_closed),
    "spherical.sphere_mean_vs_series": ("spherical", _g_real_m, _run_sphere_mean_vs_series),
    "spherical.proportionality": ("spherical", _g_real_mk, _run_proportionality_real),
    "spherical.fischer_reproduction_Z": ("spherical", _g_real_mk, _run_fischer_reproduction_Z),
    "spherical.kernel_reproduction_K": ("spherical", _g_real_kernel_pairs, _run_kernel_reproduction_K),
    "spherical.projector_annihilation": ("spherical", _g_real_mk, _run_projector_annihilation_real),
    "spherical.projector_idempotent": ("spherical", _g_real_mk, _run_projector_idempotent_real),
    "spherical.decompose_roundtrip": ("spherical", _g_real_mk, _run_decompose_real),
    "spherical.dim_formula_vs_nullspace": ("spherical", lambda cfg: _g_real_mk(cfg, kmax=5), _run_dim_oracle_real),
    "spherical.kernel_via_projection": ("spherical", _g_real_mk, _run_kernel_via_projection_real),
    "spherical.kernel_rotation_invariance": ("spherical", _g_real_mk, _run_rotation_invariance),
    # complex
    "complex.jacobi_recurrence": ("complex", _g_single_complex, _run_jacobi_recurrence),
    "complex.jacobi_reflection": ("complex", _g_single_complex, _run_jacobi_reflection),
    "complex.euler_laplacian_conventions": ("complex", _g_complex_n, _run_euler_laplacian_conventions),
    "complex.fischer_operator_vs_closed": ("complex", _g_complex_n, _run_fischer_operator_vs_closed),
    "complex.proportionality": ("complex", _g_complex_npq, _run_proportionality_complex),
    "complex.fischer_reproduction_Z": ("complex", _g_complex_npq, _run_fischer_reproduction_Z_complex),
    "complex.kernel_reproduction_K": ("complex", _g_complex_npq, _run_kernel_reproduction_K_complex),
    "complex.projector_annihilation": ("complex", _g_complex_npq, _run_projector_annihilation_complex),
    "complex.decompose_roundtrip": ("complex", _g_complex_npq, _run_decompose_complex),
    "complex.dim_formula_vs_nullspace": ("complex", lambda cfg: _g_complex_npq(cfg, degmax=3), _run_dim_oracle_complex),
    "complex.kernel_via_projection": ("complex", _g_complex_npq, _run_kernel_via_projection_complex),
    "complex.kernel_hermitian_symmetry": ("complex", _g_complex_npq, _run_hermitian_symmetry),
    # symplectic
    "symplectic.sl2_commutators": ("symplectic", _g_symp_n, _run_sl2_commutators),
    "symplectic.atoms": ("symplectic", _g_symp_n, _run_symplectic_atoms),
    "symplectic.commute_norm_laplacian": ("symplectic", _g_symp_n, _run_commute_norm_laplacian),
    "symplectic.mirror_conjugation": ("symplectic", _g_symp_n, _run_mirror_conjugation),
    "symplectic.kappa_relations": ("symplectic", _g_kappa, _run_kappa_relations),
    "symplectic.projector_annihilation": ("symplectic", _g_symp_npq, _run_projector_annihilation_symp),
    "symplectic.projector_idempotent": ("symplectic", _g_symp_npq, _run_projector_idempotent_symp),
    "symplectic.proj_commute": ("symplectic", _g_symp_npq, _run_proj_commute),
    "symplectic.fischer_reproduction_ZS": ("symplectic", _g_symp_npq, _run_fischer_reproduction_ZS),
    "symplectic.kernel_reproduction_KS": ("symplectic", _g_symp_npq, _run_kernel_reproduction_KS),
    "symplectic.laplacian_ladder": ("symplectic", _g_symp_npq_deg3, _run_laplacian_ladder),
    "symplectic.ZS_via_projection": ("symplectic", _g_symp_npq, _run_ZS_via_projection),
    "symplectic.KS_via_projection": ("symplectic", _g_symp_npq, _run_KS_via_projection),
    "symplectic.dim_formula_vs_nullspace": ("symplectic", _g_symp_npq_deg3, _run_dim_oracle_symplectic),
    "symplectic.dim_bookkeeping": ("symplectic", _g_symp_npq_deg3, _run_dim_bookkeeping_symplectic),
    "symplectic.kernel_zero_iff_dim_zero": ("symplectic", _g_symp_npq, _run_kernel_zero_iff_dim_zero),
    # pizzetti
    "pizzetti.action_lemma_real": ("pizzetti", _g_lemma_real, _run_action_lemma_real),
    "pizzetti.action_lemma_complex": ("pizzetti", _g_lemma_complex, _run_action_lemma_complex),
    "pizzetti.degree_selection": ("pizzetti", _g_degree_selection, _run_degree_selection),
    "pizzetti.sphere_consistency": ("pizzetti", _g_real_m, _run_sphere_consistency),
    "pizzetti.swap_symmetry": ("pizzetti", lambda cfg: _g_real_mk(cfg), _run_swap_symmetry),
    "pizzetti.I2_complex_vs_realJ": ("pizzetti", _g_complex_n, _run_I2_complex_vs_realJ),
    "pizzetti.mean_table_vs_operators": ("pizzetti", _g_mean_paths, _run_mean_table_vs_operators),
    # planewave
    "planewave.real": ("planewave", lambda cfg: [p for p in _g_planewave(cfg) if p["case"] == "real"], _run_planewave),
    "planewave.complex": ("planewave", lambda cfg: [p for p in _g_planewave(cfg) if p["case"] == "complex"], _run_planewave),
    "planewave.symplectic": ("planewave", lambda cfg: [p for p in _g_planewave(cfg) if p["case"] == "symplectic"], _run_planewave),
}


# ======================== driver =====================================================


def enumerate_tasks(suites, cfg: RunConfig, case: str | None = None):
    if "all" in suites:
        suites = SUITES
    tasks = []
    for ident, (suite, gridfn, _runner) in IDENTITIES.items():
        if suite not in suites:
            continue
        for params in gridfn(cfg):
            if case is not None and params.get("case") != case:
                continue
            tasks.append((ident, params))
    tasks.sort(key=lambda t: (t[0], json.dumps(t[1], sort_keys=True)))
    return tasks


def run_task(ident: str, params: dict, cfg: RunConfig) -> VerificationReport:
    runner = IDENTITIES[ident][2]
    t0 = time.perf_counter()
    try:
        report = runner(params, cfg)
    except CapExceeded as exc:
        report = VerificationReport(ident, params, SKIPPED,
                                    resolution_notes=[f"cap:{exc.cap}", exc.detail])
    if cfg.timings:
        report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


_WORKER_CFG: RunConfig | None = None


def _pool_init(cfg):
    global _WORKER_CFG
    _WORKER_CFG = cfg


def _pool_run(task):
    ident, params_json = task
    return run_task(ident, json.loads(params_json), _WORKER_CFG)


def run_identities(idents, cfg: RunConfig, jobs: int = 1,
                   case: str | None = None) -> list:
    """Run a subset of identities by id; reports sorted deterministically."""
    tasks = []
    for ident in idents:
        _suite, gridfn, _runner = IDENTITIES[ident]
        for params in gridfn(cfg):
            if case is not None and params.get("case") != case:
                continue
            tasks.append((ident, params))
    tasks.sort(key=lambda t: (t[0], json.dumps(t[1], sort_keys=True)))
    return _run_tasks(tasks, cfg, jobs)


def run_suites(suites, cfg: RunConfig, jobs: int = 1,
               case: str | None = None) -> list:
    """Run the selected suites; returns reports sorted deterministically."""
    tasks = enumerate_tasks(suites, cfg, case)
    return _run_tasks(tasks, cfg, jobs)


def _run_tasks(tasks, cfg: RunConfig, jobs: int) -> list:
    if jobs <= 1:
        reports = [run_task(ident, params, cfg) for ident, params in tasks]
    else:
        import multiprocessing as mp
        payload = [(ident, json.dumps(params, sort_keys=True))
                   for ident, params in tasks]
        with mp.get_context("fork").Pool(jobs, _pool_init, (cfg,)) as pool:
            reports = pool.map(_pool_run, payload, chunksize=1)
    reports.sort(key=lambda r: (r.identity_id,
                                json.dumps(r.params, sort_keys=True)))
    return reports
