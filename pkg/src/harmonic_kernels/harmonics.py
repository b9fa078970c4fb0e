"""Projection operators, Fischer decompositions, kernel constructors and
seeded random polynomial generators for the three harmonic families.

Kernels are always built directly in expanded homogeneous form: the radial
and angular quantities only ever appear in polynomial combinations (the
parity of the Gegenbauer/Jacobi expansions guarantees this), so the engine
never divides by a norm.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import (
    HomogeneityError,
    InvalidParamsError,
    KindMismatchError,
    ZeroDimensionalError,
)
from .operators import OperatorContext, laplacian, twist
from .params import KernelParams
from .poly import (
    EVERY_DEGREE,
    SparsePolynomial,
    degree_profile,
    power,
)
from .rng import Rng
from .scalars import ExactScalar
from .specfun import dim_formulas, jacobi, pochhammer
from .variables import VariableSystem

# -- bilinear building blocks -----------------------------------------------------


def real_inner(system: VariableSystem, ga: str, gb: str) -> SparsePolynomial:
    """<a, b> = sum_j a_j b_j for two real groups of equal length."""
    a, b = system.group(ga), system.group(gb)
    if a.length != b.length:
        raise KindMismatchError("inner product needs equal lengths")
    out = SparsePolynomial.zero(system)
    for j in range(a.length):
        out = out + SparsePolynomial.from_sid(system, a.unbarred[j]) \
            * SparsePolynomial.from_sid(system, b.unbarred[j])
    return out


def hermitian_pair(system: VariableSystem, gz: str, gu: str) -> SparsePolynomial:
    """A = <z, ubar> = sum_j z_j ubar_j."""
    z, u = system.group(gz), system.group(gu)
    if z.length != u.length or not (z.is_complex and u.is_complex):
        raise KindMismatchError("hermitian pair needs complex groups of equal length")
    out = SparsePolynomial.zero(system)
    for j in range(z.length):
        out = out + SparsePolynomial.from_sid(system, z.unbarred[j]) \
            * SparsePolynomial.from_sid(system, u.barred[j])
    return out


def skew_pair(system: VariableSystem, gz: str, gu: str) -> SparsePolynomial:
    """C = <z, u>_s = sum_{l<=n} z_l u_{n+l} - z_{n+l} u_l (even length 2n)."""
    z, u = system.group(gz), system.group(gu)
    if z.length != u.length or z.length % 2 or not (z.is_complex and u.is_complex):
        raise KindMismatchError("skew pair needs complex groups of even equal length")
    n = z.length // 2
    out = SparsePolynomial.zero(system)
    for j in range(n):
        out = out + SparsePolynomial.from_sid(system, z.unbarred[j]) \
            * SparsePolynomial.from_sid(system, u.unbarred[n + j])
        out = out - SparsePolynomial.from_sid(system, z.unbarred[n + j]) \
            * SparsePolynomial.from_sid(system, u.unbarred[j])
    return out


def norm_sq(system: VariableSystem, g: str) -> SparsePolynomial:
    """||x||^2 for a real group, <z, zbar> for a complex group."""
    grp = system.group(g)
    out = SparsePolynomial.zero(system)
    for j in range(grp.length):
        s = SparsePolynomial.from_sid(system, grp.unbarred[j])
        t = SparsePolynomial.from_sid(system, grp.barred[j]) if grp.is_complex else s
        out = out + s * t
    return out


@dataclass(frozen=True)
class BilinearAtoms:
    """The invariant bilinears of a pair of complex groups of length 2n.

    quat_modsq = A*Abar + C*Cbar is the expansion of the squared modulus of
    the quaternionic inner product; C is antisymmetric under z <-> u.
    """

    system: VariableSystem
    gz: str
    gu: str
    A: SparsePolynomial
    Abar: SparsePolynomial
    C: SparsePolynomial
    Cbar: SparsePolynomial
    normsq_z: SparsePolynomial
    normsq_u: SparsePolynomial
    quat_modsq: SparsePolynomial

    @staticmethod
    def build(system: VariableSystem, gz: str, gu: str) -> "BilinearAtoms":
        from .poly import conjugate
        A = hermitian_pair(system, gz, gu)
        C = skew_pair(system, gz, gu)
        Abar = conjugate(A)
        Cbar = conjugate(C)
        return BilinearAtoms(system, gz, gu, A, Abar, C, Cbar,
                             norm_sq(system, gz), norm_sq(system, gu),
                             A * Abar + C * Cbar)


# -- projection operators -----------------------------------------------------------


def _require_degree(P: SparsePolynomial, group: str) -> int:
    prof = degree_profile(P, group)
    if prof == EVERY_DEGREE:
        return -1  # zero polynomial: projections are zero
    if not isinstance(prof, int):
        raise HomogeneityError(f"need a homogeneous polynomial in {group!r}, got {prof}")
    return prof


def _require_bidegree(P: SparsePolynomial, group: str):
    prof = degree_profile(P, group)
    if prof == EVERY_DEGREE:
        return None
    if not isinstance(prof, tuple):
        raise HomogeneityError(f"need a bihomogeneous polynomial in {group!r}, got {prof}")
    return prof


def proj_harmonic_real(P: SparsePolynomial, group: str, ell: int = 0) -> SparsePolynomial:
    """Harmonic component map on real k-homogeneous polynomials.

    Proj^k_ell = sum_j alpha_j ||x||^(2j) Delta^(j+ell) with
    alpha_j = (-1)^j (m/2+k-2l-1) / (4^(j+l) j! l!) *
              Gamma(m/2+k-2l-j-1)/Gamma(m/2+k-l),
    the Gamma ratio evaluated as a reciprocal rising product.  Sends
    ||x||^(2j) H_(k-2j) to delta_(j,ell) H_(k-2j).
    """
    k = _require_degree(P, group)
    if k < 0:
        return P  # zero polynomial
    g = P.system.group(group)
    if g.is_complex:
        raise KindMismatchError("proj_harmonic_real needs a real group")
    if not 0 <= ell <= k // 2:
        raise InvalidParamsError(f"ell must lie in [0, {k // 2}]")
    m = g.length
    half_m = Fraction(m, 2)
    ctx = OperatorContext(P.system, group)
    D = P
    for _ in range(ell):
        D = laplacian(D, ctx, "real")
    ns = norm_sq(P.system, group)
    total = SparsePolynomial.zero(P.system)
    for j in range(0, k // 2 - ell + 1):
        c = half_m + k - 2 * ell - j - 1
        alpha = (Fraction((-1) ** j) * (half_m + k - 2 * ell - 1)
                 / (Fraction(4) ** (j + ell) * factorial(j) * factorial(ell))
                 / pochhammer(c, ell + j + 1))
        if D.is_zero:
            break
        total = total + (power(ns, j) * D).scale(alpha)
        D = laplacian(D, ctx, "real")
    return total


def proj_harmonic_complex(P: SparsePolynomial, group: str, ell: int = 0) -> SparsePolynomial:
    """Bidegree harmonic component map: P_(p,q) -> H_(p-ell,q-ell).

    Proj^{p,q}_ell = sum_j beta_j ||z||^(2j) Delta_z^(j+ell) with
    beta_j = (-1)^j (n-1+p+q-2l) / (j! l!) *
             (n-2+p+q-j-2l)! / (n-1+p+q-l)!.
    """
    prof = _require_bidegree(P, group)
    if prof is None:
        return P
    p, q = prof
    g = P.system.group(group)
    if not g.is_complex:
        raise KindMismatchError("proj_harmonic_complex needs a complex group")
    nu = min(p, q)
    if not 0 <= ell <= nu:
        raise InvalidParamsError(f"ell must lie in [0, {nu}]")
    n = g.length
    ctx = OperatorContext(P.system, group)
    D = P
    for _ in range(ell):
        D = laplacian(D, ctx, "complex")
    ns = norm_sq(P.system, group)
    total = SparsePolynomial.zero(P.system)
    for j in range(0, nu - ell + 1):
        beta = (Fraction((-1) ** j) * (n - 1 + p + q - 2 * ell)
                / (factorial(j) * factorial(ell))
                * Fraction(factorial(n - 2 + p + q - j - 2 * ell),
                           factorial(n - 1 + p + q - ell)))
        if D.is_zero:
            break
        total = total + (power(ns, j) * D).scale(beta)
        D = laplacian(D, ctx, "complex")
    return total


def symplectic_gamma(d: int, j: int) -> Fraction:
    """gamma_j = (-1)^j / j! * (d+1)! / (d+1+j)! with d = |q - p|."""
    return Fraction((-1) ** j, factorial(j)) * Fraction(factorial(d + 1),
                                                        factorial(d + 1 + j))


def proj_symplectic(P: SparsePolynomial, group: str, orientation: str) -> SparsePolynomial:
    """Projection onto the symplectic component of the same bidegree.

    orientation='Edag' (for p <= q) applies sum_j gamma_j E^j Edag^j and
    lands in ker Edag; orientation='E' is the conjugate-mirrored operator
    sum_j gamma_j Edag^j E^j for q <= p, landing in ker E.
    """
    prof = _require_bidegree(P, group)
    if prof is None:
        return P
    p, q = prof
    if orientation == "Edag":
        if p > q:
            raise InvalidParamsError("Edag orientation needs p <= q")
        inner, outer = "Edag", "E"
    elif orientation == "E":
        if q > p:
            raise InvalidParamsError("E orientation needs q <= p")
        inner, outer = "E", "Edag"
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    nu = min(p, q)
    d = abs(q - p)
    ctx = OperatorContext(P.system, group)
    total = SparsePolynomial.zero(P.system)
    inner_pow = P
    for j in range(nu + 1):
        piece = inner_pow
        for _ in range(j):
            piece = twist(piece, ctx, outer)
        total = total + piece.scale(symplectic_gamma(d, j))
        if j < nu:
            inner_pow = twist(inner_pow, ctx, inner)
            if inner_pow.is_zero:
                break
    return total


def decompose(P: SparsePolynomial, flavor: str, group: str) -> list:
    """Fischer decomposition into components that sum to P exactly.

    real:        P_k       = (+) ||x||^(2j) H_(k-2j)
    complex:     P_(p,q)   = (+) ||z||^(2j) H_(p-j,q-j)
    symplectic:  P_(p,q)   = (+) E^j R_(p-j,q+j)            (p <= q)
                           = (+) Edag^j R_(p+j,q-j)         (p >= q)
    """
    system = P.system
    if flavor == "real":
        k = _require_degree(P, group)
        if k < 0:
            return []
        ns = norm_sq(system, group)
        return [power(ns, j) * proj_harmonic_real(P, group, j)
                for j in range(k // 2 + 1)]
    if flavor == "complex":
        prof = _require_bidegree(P, group)
        if prof is None:
            return []
        nu = min(prof)
        ns = norm_sq(system, group)
        return [power(ns, j) * proj_harmonic_complex(P, group, j)
                for j in range(nu + 1)]
    if flavor == "symplectic":
        prof = _require_bidegree(P, group)
        if prof is None:
            return []
        p, q = prof
        up = "E" if p <= q else "Edag"          # the decomposition's ladder map
        down = "Edag" if p <= q else "E"
        orientation = "Edag" if p <= q else "E"
        nu = min(p, q)
        d = abs(q - p)
        ctx = OperatorContext(system, group)
        comps = []
        lowered = P
        for j in range(nu + 1):
            R = proj_symplectic(lowered, group, orientation)
            # kappa at a = b = j for the shifted bidegree: j! (d+j+1)_j
            R = R.scale(Fraction(1) / (factorial(j) * pochhammer(d + j + 1, j)))
            comp = R
            for _ in range(j):
                comp = twist(comp, ctx, up)
            comps.append(comp)
            lowered = twist(lowered, ctx, down)
            if lowered.is_zero and j + 1 <= nu:
                comps.extend(SparsePolynomial.zero(system)
                             for _ in range(nu - j))
                break
        return comps
    raise ValueError(f"unknown decomposition flavor {flavor!r}")


# -- kernels ---------------------------------------------------------------------


def _default_system(params: KernelParams):
    if params.case == "real":
        return VariableSystem([("x", params.m, "real"), ("y", params.m, "real")]), ("x", "y")
    N = params.complex_dim
    return VariableSystem([("z", N, "complex"), ("u", N, "complex")]), ("z", "u")


@lru_cache(maxsize=None)
def kernel(params: KernelParams, which: str,
           system: VariableSystem | None = None,
           groups: tuple | None = None,
           bar_orientation: str = "zbar_u") -> SparsePolynomial:
    """Reproducing kernels as genuine expanded polynomials.

    which: 'Z' (homogeneous Fischer kernel), 'K' (spherical/ complex harmonic
    kernel), 'ZS' (symplectic Fischer kernel), 'KS' (symplectic harmonic
    kernel).  `bar_orientation` selects the conjugation slot of the
    degree-gap factor in ZS/KS: 'zbar_u' carries <zbar,u>^(q-p), 'z_ubar'
    the mirrored <z,ubar>^(q-p); the verification suite determines
    empirically which orientation reproduces and records the outcome.
    """
    if system is None:
        system, groups = _default_system(params)
    gz, gu = groups

    if params.case == "real":
        if which not in ("Z", "K"):
            raise InvalidParamsError(f"kernel {which!r} undefined for the real case")
        k = params.k
        xy = real_inner(system, gz, gu)
        if which == "Z":
            return power(xy, k).scale(Fraction(1, factorial(k)))
        m = params.m
        mu = Fraction(m, 2) - 1
        if mu <= 0:
            raise InvalidParamsError("Gegenbauer kernel needs m >= 3")
        nsx = norm_sq(system, gz)
        nsy = norm_sq(system, gu)
        total = SparsePolynomial.zero(system)
        for r in range(k // 2 + 1):
            d = k - 2 * r
            c = (Fraction((-1) ** r) * pochhammer(mu, k - r)
                 / (factorial(r) * factorial(d)) * 2 ** d)
            total = total + (power(xy, d) * power(nsx * nsy, r)).scale(c)
        return total.scale((k + mu) / mu)

    p, q = params.p, params.q
    N = params.complex_dim
    A = hermitian_pair(system, gz, gu)
    from .poly import conjugate
    Abar = conjugate(A)

    if params.case == "complex":
        if which not in ("Z", "K"):
            raise InvalidParamsError(f"kernel {which!r} undefined for the complex case")
        if which == "Z":
            return (power(A, p) * power(Abar, q)).scale(
                Fraction(1, factorial(p) * factorial(q)))
        n = N
        nu = min(p, q)
        k = p + q
        a_pq = Fraction(n - 1 + k, n - 1) * _comb(k - nu + n - 2, k - nu)
        jac = jacobi(nu, n - 2, abs(p - q)).compose_affine(2, -1)
        nsz = norm_sq(system, gz)
        nsu = norm_sq(system, gu)
        AAbar = A * Abar
        total = SparsePolynomial.zero(system)
        for i in range(nu + 1):
            ci = jac.coefficient(i)
            if not ci:
                continue
            total = total + (power(AAbar, i) * power(nsz * nsu, nu - i)).scale(ci)
        return (power(A, p - nu) * power(Abar, q - nu) * total).scale(a_pq)

    # symplectic case: N = 2n
    if which not in ("ZS", "KS"):
        raise InvalidParamsError(f"kernel {which!r} undefined for the symplectic case")
    n = params.n
    atoms = BilinearAtoms.build(system, gz, gu)
    gap = atoms.Abar if bar_orientation == "zbar_u" else atoms.A
    if which == "ZS":
        b_pq = Fraction(q - p + 1, factorial(p) * factorial(q + 1))
        return (power(gap, q - p) * power(atoms.quat_modsq, p)).scale(b_pq)
    d_pq = (Fraction(q - p + 1) * (p + q + 2 * n - 1)
            * Fraction(factorial(q + 2 * n - 2),
                       factorial(2 * n - 1) * factorial(q + 1)))
    jac = jacobi(p, 2 * n - 3, q - p + 1).compose_affine(2, -1)
    nsz_nsu = atoms.normsq_z * atoms.normsq_u
    total = SparsePolynomial.zero(system)
    for i in range(p + 1):
        ci = jac.coefficient(i)
        if not ci:
            continue
        total = total + (power(atoms.quat_modsq, i) * power(nsz_nsu, p - i)).scale(ci)
    return (power(gap, q - p) * total).scale(d_pq)


def _comb(a: int, b: int) -> int:
    from math import comb
    return comb(a, b)


# -- seeded random polynomials -----------------------------------------------------


def _monomial_basis_real(system, group, k):
    g = system.group(group)
    for combo in itertools.combinations_with_replacement(g.unbarred, k):
        ex = {}
        for s in combo:
            ex[s] = ex.get(s, 0) + 1
        yield tuple(sorted(ex.items()))


def _monomial_basis_bidegree(system, group, p, q):
    g = system.group(group)
    for cu in itertools.combinations_with_replacement(g.unbarred, p):
        exu = {}
        for s in cu:
            exu[s] = exu.get(s, 0) + 1
        for cb in itertools.combinations_with_replacement(g.barred, q):
            ex = dict(exu)
            for s in cb:
                ex[s] = ex.get(s, 0) + 1
            yield tuple(sorted(ex.items()))


def _target_dim(params: KernelParams, flavor: str) -> int:
    if flavor == "homogeneous":
        return 1  # never empty
    if flavor == "harmonic":
        if params.case == "real":
            return dim_formulas(params, "spherical")
        return dim_formulas(params, "complex_bidegree")
    if flavor == "symplectic":
        return dim_formulas(params, "symplectic_R")
    if flavor == "symplectic_harmonic":
        return dim_formulas(params, "symplectic_HS")
    raise ValueError(f"unknown flavor {flavor!r}")


@lru_cache(maxsize=None)
def random_poly(seed: int, params: KernelParams, flavor: str,
                system: VariableSystem | None = None,
                group: str | None = None) -> SparsePolynomial:
    """Deterministic random polynomial of the requested flavor.

    Coefficients are drawn uniformly from the integers [-9, 9] with the
    documented splitmix64 stream, then projected (harmonic via the harmonic
    projector, symplectic via the symplectic one, symplectic_harmonic via
    both; the two projectors commute).  Nonzero unless the target space is
    zero-dimensional, which raises.
    """
    if system is None:
        system, groups = _default_system(params)
        group = groups[0]
    if _target_dim(params, flavor) == 0:
        raise ZeroDimensionalError(
            f"{flavor} space at {params} is zero-dimensional")
    if params.case == "real":
        basis = list(_monomial_basis_real(system, group, params.k))
    else:
        basis = list(_monomial_basis_bidegree(system, group, params.p, params.q))
    rng = Rng(seed)
    for _attempt in range(64):
        terms = {}
        for mono in basis:
            c = rng.randint(-9, 9)
            if c:
                terms[mono] = ExactScalar(c)
        P = SparsePolynomial(system, terms, _normalized=True)
        if flavor == "harmonic":
            if params.case == "real":
                P = proj_harmonic_real(P, group, 0)
            else:
                P = proj_harmonic_complex(P, group, 0)
        elif flavor == "symplectic":
            P = proj_symplectic(P, group,
                                "Edag" if params.p <= params.q else "E")
        elif flavor == "symplectic_harmonic":
            P = proj_symplectic(P, group,
                                "Edag" if params.p <= params.q else "E")
            P = proj_harmonic_complex(P, group, 0)
        if not P.is_zero:
            return P
    raise ZeroDimensionalError(f"could not draw a nonzero {flavor} polynomial")
