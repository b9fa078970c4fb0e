"""Exact rational special functions: Pochhammer symbols, Gegenbauer and
Jacobi polynomials, dimension formulas.

Everything stays in Q.  Gamma functions are never evaluated; only Gamma
ratios at integer offsets appear, and those are rising products.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import InvalidParamsError
from .params import KernelParams
from .scalars import ExactScalar


def pochhammer(a, r: int) -> Fraction:
    """Rising product (a)_r = a (a+1) ... (a+r-1); (a)_0 = 1."""
    if r < 0:
        raise InvalidParamsError("pochhammer needs a non-negative offset")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(r):
        out *= a + i
    return out


def binom_general(a, k: int) -> Fraction:
    """Generalized binomial C(a, k) = (a-k+1)_k / k! for rational a."""
    return pochhammer(Fraction(a) - k + 1, k) / factorial(k)


class UnivariateExact:
    """Dense univariate polynomial with ExactScalar coefficients.

    Trailing zero coefficients are trimmed; degree is len(coeffs) - 1 and
    the zero polynomial has degree -1.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var: str = "t"):
        cs = [c if isinstance(c, ExactScalar) else ExactScalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> ExactScalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ExactScalar(0)

    def __call__(self, x) -> ExactScalar:
        acc = ExactScalar(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return (isinstance(other, UnivariateExact) and self.coeffs == other.coeffs)

    def __repr__(self):
        body = " + ".join(f"({c})*{self.var}^{i}" for i, c in enumerate(self.coeffs))
        return body or "0"

    def compose_affine(self, a, b) -> "UnivariateExact":
        """Coefficients of self(a*s + b) as a polynomial in s."""
        a = a if isinstance(a, ExactScalar) else ExactScalar(a)
        b = b if isinstance(b, ExactScalar) else ExactScalar(b)
        acc = [ExactScalar(0)]
        for c in reversed(self.coeffs):
            # acc = acc*(a s + b) + c
            nxt = [ExactScalar(0)] * (len(acc) + 1)
            for i, ci in enumerate(acc):
                nxt[i + 1] = nxt[i + 1] + ci * a
                nxt[i] = nxt[i] + ci * b
            nxt[0] = nxt[0] + c
            acc = nxt
        return UnivariateExact(acc, var="s")


def gegenbauer(k: int, mu) -> UnivariateExact:
    """Gegenbauer polynomial C_k^mu with exact coefficients.

    Uses the homogeneous expansion
        C_k^mu(t) = sum_r (-1)^r (mu)_{k-r} / (r! (k-2r)!) * (2t)^{k-2r},
    where the Gamma ratio Gamma(mu+k-r)/Gamma(mu) is the rising product
    (mu)_{k-r}, valid for half-integer mu.  Requires mu > 0 (the mu = 0
    Chebyshev limit is out of scope).
    """
    mu = Fraction(mu)
    if mu <= 0:
        raise InvalidParamsError("gegenbauer requires mu > 0")
    coeffs = [Fraction(0)] * (k + 1)
    for r in range(k // 2 + 1):
        d = k - 2 * r
        coeffs[d] = (-1) ** r * pochhammer(mu, k - r) / (factorial(r) * factorial(d)) * 2 ** d
    return UnivariateExact(coeffs)


def gegenbauer_by_recurrence(k: int, mu) -> UnivariateExact:
    """Independent construction via k C_k = 2t(k+mu-1) C_{k-1} - (k+2mu-2) C_{k-2}."""
    mu = Fraction(mu)
    if mu <= 0:
        raise InvalidParamsError("gegenbauer requires mu > 0")
    if k == 0:
        return UnivariateExact([1])
    prev = [Fraction(1)]
    cur = [Fraction(0), 2 * mu]
    for deg in range(2, k + 1):
        shifted = [Fraction(0)] + cur            # t * C_{deg-1}
        nxt = [Fraction(0)] * (deg + 1)
        for i, c in enumerate(shifted):
            nxt[i] += 2 * (deg + mu - 1) * c
        for i, c in enumerate(prev):
            nxt[i] -= (deg + 2 * mu - 2) * c
        nxt = [c / deg for c in nxt]
        prev, cur = cur, nxt
    return UnivariateExact(cur)


def jacobi(nu: int, alpha, beta) -> UnivariateExact:
    """Jacobi polynomial P_nu^{alpha,beta} with exact coefficients.

    Built from the finite sum
        P_nu(x) = sum_s C(nu+alpha, nu-s) C(nu+beta, s)
                  ((x-1)/2)^s ((x+1)/2)^{nu-s}.
    Parameters below -1 are rejected; the boundary alpha = -1 is admitted
    because the symplectic kernel at quaternionic dimension 1 needs
    P_p^{-1,beta}, for which the sum above is still a well-defined
    polynomial.
    """
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    if alpha < -1 or beta < -1:
        raise InvalidParamsError("jacobi requires alpha, beta >= -1")
    half = Fraction(1, 2)
    coeffs = [Fraction(0)] * (nu + 1)
    for s in range(nu + 1):
        c = binom_general(nu + alpha, nu - s) * binom_general(nu + beta, s)
        if not c:
            continue
        # ((x-1)/2)^s ((x+1)/2)^{nu-s} expanded binomially
        for i in range(s + 1):
            ai = comb(s, i) * (-1) ** (s - i)
            for j in range(nu - s + 1):
                bj = comb(nu - s, j)
                coeffs[i + j] += c * ai * bj * half ** nu
    return UnivariateExact(coeffs, var="x")


def jacobi_by_recurrence(nu: int, alpha, beta) -> UnivariateExact:
    """Independent construction via the classical three-term recurrence.

    Only valid for alpha, beta > -1 (no degenerate denominators on that
    range for nu >= 2).
    """
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    if alpha <= -1 or beta <= -1:
        raise InvalidParamsError("recurrence oracle requires alpha, beta > -1")
    if nu == 0:
        return UnivariateExact([1], var="x")
    p_prev = [Fraction(1)]
    p_cur = [(alpha + 1) + (alpha + beta + 2) * Fraction(-1, 2),
             (alpha + beta + 2) * Fraction(1, 2)]
    for m in range(2, nu + 1):
        a1 = 2 * m * (m + alpha + beta) * (2 * m + alpha + beta - 2)
        a2 = (2 * m + alpha + beta - 1) * (alpha * alpha - beta * beta)
        a3 = (2 * m + alpha + beta - 1) * (2 * m + alpha + beta) * (2 * m + alpha + beta - 2)
        a4 = 2 * (m + alpha - 1) * (m + beta - 1) * (2 * m + alpha + beta)
        nxt = [Fraction(0)] * (m + 1)
        for i, c in enumerate(p_cur):
            nxt[i] += a2 * c
            nxt[i + 1] += a3 * c
        for i, c in enumerate(p_prev):
            nxt[i] -= a4 * c
        nxt = [c / a1 for c in nxt]
        p_prev, p_cur = p_cur, nxt
    return UnivariateExact(p_cur, var="x")


# -- dimension formulas ----------------------------------------------------------


def dim_bidegree_space(N: int, p: int, q: int) -> int:
    """dim P_{p,q} over C^N: monomials z^a zbar^b with |a| = p, |b| = q."""
    if p < 0 or q < 0:
        return 0
    return comb(p + N - 1, N - 1) * comb(q + N - 1, N - 1)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise InvalidParamsError(f"dimension formula produced non-integer {x}")
    return int(x)


def dim_formulas(params: KernelParams, which: str) -> int:
    """Closed-form dimensions for the harmonic families.

    which: 'spherical' | 'complex_bidegree' | 'symplectic_R' | 'symplectic_HS'.
    The symplectic dimensions follow from the Fischer decompositions:
    dim R_{p,q} = dim P_{p,q} - dim P_{p-1,q+1} (p <= q) and
    dim HS_{p,q} = dim R_{p,q} - dim R_{p-1,q-1}.
    """
    if which == "spherical":
        if params.case != "real":
            raise InvalidParamsError("spherical dimension needs real params")
        m, k = params.m, params.k
        if k == 0:
            return 1
        return _as_int(Fraction(2 * k + m - 2, k + m - 2) * comb(k + m - 2, m - 2))
    if which == "complex_bidegree":
        n = params.complex_dim
        p, q = params.p, params.q
        return _as_int(Fraction(n + p + q - 1, n - 1)
                       * comb(q + n - 2, n - 2) * comb(p + n - 2, n - 2))
    if which == "symplectic_R":
        if params.case != "symplectic":
            raise InvalidParamsError("symplectic dimension needs symplectic params")
        N = params.complex_dim
        return _dim_R(N, params.p, params.q)
    if which == "symplectic_HS":
        if params.case != "symplectic":
            raise InvalidParamsError("symplectic dimension needs symplectic params")
        N = params.complex_dim
        p, q = params.p, params.q
        return _dim_R(N, p, q) - _dim_R(N, p - 1, q - 1)
    raise InvalidParamsError(f"unknown dimension family {which!r}")


def _dim_R(N: int, p: int, q: int) -> int:
    if p < 0 or q < 0:
        return 0
    if p > q:
        p, q = q, p
    return dim_bidegree_space(N, p, q) - dim_bidegree_space(N, p - 1, q + 1)
