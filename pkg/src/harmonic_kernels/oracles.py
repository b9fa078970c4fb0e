"""Independent brute-force oracles.

Dimension formulas are checked against exact nullspace ranks of operator
matrices on monomial bases; rotation invariance uses exactly orthogonal
rational matrices from the Cayley transform of random skew matrices; the
complex/real Pizzetti operator comparison runs through an explicit linear
coordinate change.  Everything here is deliberately independent of the
closed forms it certifies.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InvalidParamsError
from .harmonics import _monomial_basis_bidegree, _monomial_basis_real
from .operators import OperatorContext, laplacian, twist
from .poly import SparsePolynomial, substitute
from .rng import Rng
from .scalars import ExactScalar
from .variables import VariableSystem


def _int_coeff(c: ExactScalar) -> int:
    if c.im or c.re.denominator != 1:
        raise InvalidParamsError("oracle matrices must have integer entries")
    return int(c.re)


def matrix_rank_exact(columns) -> int:
    """Exact rank over Q of integer column vectors (dicts key -> int)."""
    pivots: dict = {}
    rank = 0
    for col in columns:
        vec = {k: v for k, v in col.items() if v}
        while vec:
            k = min(vec)
            piv = pivots.get(k)
            if piv is None:
                g = 0
                for v in vec.values():
                    g = gcd(g, v)
                if g > 1:
                    vec = {kk: v // g for kk, v in vec.items()}
                pivots[k] = vec
                rank += 1
                break
            a, b = vec[k], piv[k]
            nxt = {}
            for kk, v in vec.items():
                nxt[kk] = b * v
            for kk, v in piv.items():
                w = nxt.get(kk, 0) - a * v
                if w:
                    nxt[kk] = w
                elif kk in nxt:
                    del nxt[kk]
            vec = {kk: v for kk, v in nxt.items() if v}
    return rank


def _operator_columns(system, basis, ops):
    """Columns of the stacked operator matrix over a monomial basis."""
    for mono in basis:
        P = SparsePolynomial(system, {mono: ExactScalar(1)}, _normalized=True)
        col = {}
        for tag, op in enumerate(ops):
            img = op(P)
            for m, c in img.terms.items():
                col[(tag, m)] = _int_coeff(c)
        yield col


def nullspace_dim_laplacian_real(m: int, k: int) -> int:
    """dim ker(Delta) on P_k(R^m) by exact rank-nullity."""
    system = VariableSystem([("x", m, "real")])
    ctx = OperatorContext(system, "x")
    basis = list(_monomial_basis_real(system, "x", k))
    rank = matrix_rank_exact(
        _operator_columns(system, basis, [lambda P: laplacian(P, ctx, "real")]))
    return len(basis) - rank


def nullspace_dim_laplacian_complex(N: int, p: int, q: int) -> int:
    """dim ker(Delta_z) on P_{p,q}(C^N)."""
    system = VariableSystem([("z", N, "complex")])
    ctx = OperatorContext(system, "z")
    basis = list(_monomial_basis_bidegree(system, "z", p, q))
    rank = matrix_rank_exact(
        _operator_columns(system, basis, [lambda P: laplacian(P, ctx, "complex")]))
    return len(basis) - rank


def nullspace_dim_symplectic_R(N: int, p: int, q: int) -> int:
    """dim ker(Edag) on P_{p,q}(C^N) for p <= q (ker E for p >= q)."""
    system = VariableSystem([("z", N, "complex")])
    ctx = OperatorContext(system, "z")
    variant = "Edag" if p <= q else "E"
    basis = list(_monomial_basis_bidegree(system, "z", p, q))
    rank = matrix_rank_exact(
        _operator_columns(system, basis, [lambda P: twist(P, ctx, variant)]))
    return len(basis) - rank


def nullspace_dim_symplectic_HS(N: int, p: int, q: int) -> int:
    """dim of the joint kernel of Delta_z and the twist on P_{p,q}(C^N)."""
    system = VariableSystem([("z", N, "complex")])
    ctx = OperatorContext(system, "z")
    variant = "Edag" if p <= q else "E"
    basis = list(_monomial_basis_bidegree(system, "z", p, q))
    ops = [lambda P: laplacian(P, ctx, "complex"),
           lambda P: twist(P, ctx, variant)]
    rank = matrix_rank_exact(_operator_columns(system, basis, ops))
    return len(basis) - rank


# -- exact rational rotations -------------------------------------------------------


def _mat_mul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def _mat_inv(A):
    n = len(A)
    aug = [[Fraction(A[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def cayley_rotation(m: int, rng: Rng):
    """Exactly orthogonal rational matrix (I - S)(I + S)^-1, S random skew.

    The Cayley transform guarantees R^T R = I in exact arithmetic; asserted
    before returning.
    """
    S = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            v = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            S[i][j] = v
            S[j][i] = -v
    eye = [[Fraction(1 if i == j else 0) for j in range(m)] for i in range(m)]
    i_minus = [[eye[i][j] - S[i][j] for j in range(m)] for i in range(m)]
    i_plus = [[eye[i][j] + S[i][j] for j in range(m)] for i in range(m)]
    R = _mat_mul(i_minus, _mat_inv(i_plus))
    Rt = [[R[j][i] for j in range(m)] for i in range(m)]
    assert _mat_mul(Rt, R) == eye
    return R


def rotate_group(P: SparsePolynomial, group: str, R) -> SparsePolynomial:
    """Substitute x_j -> sum_l R[j][l] x_l within one real group."""
    system = P.system
    g = system.group(group)
    mapping = {}
    for j in range(g.length):
        img = SparsePolynomial.zero(system)
        for l in range(g.length):
            if R[j][l]:
                img = img + SparsePolynomial.from_sid(
                    system, g.unbarred[l]).scale(R[j][l])
        mapping[g.unbarred[j]] = img
    return substitute(P, mapping)


# -- real/complex coordinate bridge ---------------------------------------------------


def realify(P: SparsePolynomial, pairs) -> SparsePolynomial:
    """Substitute complex symbols by their real coordinates.

    pairs: (complex_group, real_group) with len(real) = 2 * len(complex);
    z_j -> w_j + i w_{N+j} and zbar_j -> w_j - i w_{N+j}.
    """
    system = P.system
    i_unit = ExactScalar(0, 1)
    mapping = {}
    for cg, rg in pairs:
        gc = system.group(cg)
        gr = system.group(rg)
        N = gc.length
        for j in range(N):
            re = SparsePolynomial.from_sid(system, gr.unbarred[j])
            im = SparsePolynomial.from_sid(system, gr.unbarred[N + j])
            mapping[gc.unbarred[j]] = re + im.scale(i_unit)
            mapping[gc.barred[j]] = re - im.scale(i_unit)
    return substitute(P, mapping)


def grad_pair_J(P: SparsePolynomial, gw: str, gv: str) -> SparsePolynomial:
    """One application of <grad_w, J grad_v> = sum_j dw_j dv_{N+j} - dw_{N+j} dv_j
    for real groups of even length 2N."""
    system = P.system
    w = system.group(gw)
    v = system.group(gv)
    N = w.length // 2
    out = SparsePolynomial.zero(system)
    for j in range(N):
        out = out + P.partial_sid(w.unbarred[j]).partial_sid(v.unbarred[N + j])
        out = out - P.partial_sid(w.unbarred[N + j]).partial_sid(v.unbarred[j])
    return out
