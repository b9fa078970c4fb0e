"""The engine's differential operators and inner products.

Covers the Euler operators, real and complex Laplacians, the twisted
first-order operators E and Edag with their index pairing j <-> n+j,
paired gradient contractions, the Fischer inner products (factorial
closed form plus the literal differentiation path as an oracle), and the
normalized sphere mean with the spherical L2 inner product built on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import HomogeneityError, KindMismatchError
from .poly import SparsePolynomial, conjugate, restrict_zero
from .scalars import ExactScalar
from .specfun import pochhammer
from .variables import VariableSystem


@dataclass(frozen=True)
class OperatorContext:
    """A variable system with a distinguished (differentiated) group.

    For complex groups of even length 2n the index pairing j <-> n+j used
    by E, Edag and the skew product is fixed by declaration order: first
    half against second half.
    """

    system: VariableSystem
    group: str

    def __post_init__(self):
        self.system.group(self.group)  # raises if unknown

    @property
    def g(self):
        return self.system.group(self.group)

    def pairing(self):
        g = self.g
        if not g.is_complex or g.length % 2:
            raise KindMismatchError(
                f"group {self.group!r} must be complex of even length for E/Edag")
        n = g.length // 2
        return [(j, n + j) for j in range(n)]


def _get_exp(mono, sid: int) -> int:
    for s, e in mono:
        if s == sid:
            return e
        if s > sid:
            return 0
    return 0


def _mono_shift(mono, deltas):
    """Add deltas {sid: d} to a monomial; assumes result stays >= 0."""
    ex = dict(mono)
    for sid, d in deltas.items():
        e = ex.get(sid, 0) + d
        if e:
            ex[sid] = e
        elif sid in ex:
            del ex[sid]
    return tuple(sorted(ex.items()))


def _accumulate(out: dict, mono, coeff):
    acc = out.get(mono)
    if acc is None:
        out[mono] = coeff
    else:
        s = acc + coeff
        if s:
            out[mono] = s
        else:
            del out[mono]


# -- Euler operators -------------------------------------------------------------


def euler(P: SparsePolynomial, ctx: OperatorContext, variant: str = "full") -> SparsePolynomial:
    """Euler operator: full (all group symbols), holomorphic, or antiholomorphic.

    Acts diagonally on monomials with eigenvalue the corresponding degree.
    """
    g = ctx.g
    if variant == "full":
        sids = frozenset(g.sym_ids)
    elif variant == "holomorphic":
        if not g.is_complex:
            raise KindMismatchError("holomorphic Euler needs a complex group")
        sids = frozenset(g.unbarred)
    elif variant == "antiholomorphic":
        if not g.is_complex:
            raise KindMismatchError("antiholomorphic Euler needs a complex group")
        sids = frozenset(g.barred)
    else:
        raise ValueError(f"unknown Euler variant {variant!r}")
    out = {}
    for m, c in P.terms.items():
        d = sum(e for s, e in m if s in sids)
        if d:
            out[m] = c * d
    return SparsePolynomial(P.system, out, _normalized=True)


# -- Laplacians ------------------------------------------------------------------


def laplacian(P: SparsePolynomial, ctx: OperatorContext, variant: str = "real") -> SparsePolynomial:
    """Laplacian on the active group.

    variant='real' is sum of second derivatives; on a complex group this is
    4 * Delta_z.  variant='complex' is Delta_z = sum d/dzbar d/dz and
    requires a complex group.
    """
    g = ctx.g
    if variant == "complex":
        if not g.is_complex:
            raise KindMismatchError("complex Laplacian needs a complex group")
        return _laplacian_z(P, g)
    if variant != "real":
        raise ValueError(f"unknown Laplacian variant {variant!r}")
    if g.is_complex:
        return _laplacian_z(P, g).scale(4)
    out = {}
    gsids = frozenset(g.sym_ids)
    for m, c in P.terms.items():
        for s, e in m:
            if s in gsids and e >= 2:
                _accumulate(out, _mono_shift(m, {s: -2}), c * (e * (e - 1)))
    return SparsePolynomial(P.system, out, _normalized=True)


def _laplacian_z(P: SparsePolynomial, g) -> SparsePolynomial:
    out = {}
    for m, c in P.terms.items():
        ex = dict(m)
        for j in range(g.length):
            su, sb = g.unbarred[j], g.barred[j]
            eu = ex.get(su, 0)
            eb = ex.get(sb, 0)
            if eu and eb:
                _accumulate(out, _mono_shift(m, {su: -1, sb: -1}), c * (eu * eb))
    return SparsePolynomial(P.system, out, _normalized=True)


# -- twisted operators E / Edag ---------------------------------------------------


def _first_order(P: SparsePolynomial, pieces) -> SparsePolynomial:
    """Apply sum of coef * (mult symbol) * d/d(diff symbol) in one pass."""
    out = {}
    for m, c in P.terms.items():
        for mult, diff, coef in pieces:
            e = _get_exp(m, diff)
            if e:
                _accumulate(out, _mono_shift(m, {diff: -1, mult: 1}), c * (e * coef))
    return SparsePolynomial(P.system, out, _normalized=True)


def twist(P: SparsePolynomial, ctx: OperatorContext, variant: str) -> SparsePolynomial:
    """The Sp(n)-invariant bidegree-shifting operators.

    E    = sum_j z_j d/dzbar_{n+j} - z_{n+j} d/dzbar_j      : (p,q) -> (p+1,q-1)
    Edag = sum_j zbar_{n+j} d/dz_j - zbar_j d/dz_{n+j}      : (p,q) -> (p-1,q+1)
    """
    g = ctx.g
    pairs = ctx.pairing()
    pieces = []
    if variant == "E":
        for j, nj in pairs:
            pieces.append((g.unbarred[j], g.barred[nj], 1))
            pieces.append((g.unbarred[nj], g.barred[j], -1))
    elif variant == "Edag":
        for j, nj in pairs:
            pieces.append((g.barred[nj], g.unbarred[j], 1))
            pieces.append((g.barred[j], g.unbarred[nj], -1))
    else:
        raise ValueError(f"unknown twist variant {variant!r}")
    return _first_order(P, pieces)


# -- paired gradient contractions --------------------------------------------------


def grad_pair(P: SparsePolynomial, group_a: str, group_b: str,
              variant: str = "real") -> SparsePolynomial:
    """One application of sum_j d/da_j d/db_j with the variant's bar placement.

    'real' pairs the plain symbols; 'holo_anti' is <grad_a, grad_bbar>;
    'anti_holo' is <grad_abar, grad_b>.
    """
    ga = P.system.group(group_a)
    gb = P.system.group(group_b)
    if ga.length != gb.length:
        raise KindMismatchError("grad_pair needs groups of equal length")
    if variant == "real":
        sa, sb = ga.unbarred, gb.unbarred
    elif variant == "holo_anti":
        if not (ga.is_complex and gb.is_complex):
            raise KindMismatchError("barred gradients need complex groups")
        sa, sb = ga.unbarred, gb.barred
    elif variant == "anti_holo":
        if not (ga.is_complex and gb.is_complex):
            raise KindMismatchError("barred gradients need complex groups")
        sa, sb = ga.barred, gb.unbarred
    else:
        raise ValueError(f"unknown grad_pair variant {variant!r}")
    out = {}
    for m, c in P.terms.items():
        ex = dict(m)
        for j in range(ga.length):
            s1, s2 = sa[j], sb[j]
            if s1 == s2:
                e = ex.get(s1, 0)
                if e >= 2:
                    _accumulate(out, _mono_shift(m, {s1: -2}), c * (e * (e - 1)))
            else:
                e1 = ex.get(s1, 0)
                e2 = ex.get(s2, 0)
                if e1 and e2:
                    _accumulate(out, _mono_shift(m, {s1: -1, s2: -1}), c * (e1 * e2))
    return SparsePolynomial(P.system, out, _normalized=True)


# -- Fischer inner products ---------------------------------------------------------


def _mono_factorial(mono) -> int:
    w = 1
    for _, e in mono:
        if e > 1:
            w *= factorial(e)
    return w


def fischer_form(P: SparsePolynomial, Q: SparsePolynomial,
                 group: str) -> SparsePolynomial:
    """Fischer pairing in `group`, parameters in other groups passing through.

    Computes [conj(P)(d) Q] at group = 0 via the factorial closed form: group
    monomials pair off diagonally with weight alpha! (times beta! for the
    conjugate family), and the polynomial coefficients multiply after
    conjugating P's side.
    """
    if P.system != Q.system:
        raise KindMismatchError("fischer operands in different systems")
    system = P.system
    psplit = P.split_by_group(group)
    qsplit = Q.split_by_group(group)
    if len(psplit) > len(qsplit):
        items = ((gm, pc, qsplit.get(gm)) for gm, pc in psplit.items())
    else:
        items = ((gm, psplit.get(gm), qc) for gm, qc in qsplit.items())
    total = SparsePolynomial.zero(system)
    for gm, pc, qc in items:
        if pc is None or qc is None:
            continue
        w = _mono_factorial(gm)
        cp = conjugate(SparsePolynomial(system, pc, _normalized=True))
        qp = SparsePolynomial(system, qc, _normalized=True)
        total = total + (cp * qp).scale(w)
    return total


def _fischer_scalar(P, Q, group, want_kind) -> ExactScalar:
    g = P.system.group(group)
    if g.kind != want_kind:
        raise KindMismatchError(f"expected a {want_kind} group")
    if not P.uses_only(group) or not Q.uses_only(group):
        raise HomogeneityError("fischer product operands must use only the group's symbols")
    return fischer_form(P, Q, group).constant_value()


def fischer_real(P: SparsePolynomial, Q: SparsePolynomial, group: str) -> ExactScalar:
    """Real Fischer inner product <P,Q> = [conj(P)(d)Q]_0 on a real group."""
    return _fischer_scalar(P, Q, group, "real")


def fischer_complex(P: SparsePolynomial, Q: SparsePolynomial, group: str) -> ExactScalar:
    """Complex Fischer inner product on a complex group (weight alpha! beta!)."""
    return _fischer_scalar(P, Q, group, "complex")


def fischer_by_differentiation(P: SparsePolynomial, Q: SparsePolynomial,
                               group: str) -> SparsePolynomial:
    """Oracle path: literally substitute derivatives into conj(P) and apply.

    Real symbols substitute their own derivative; complex symbols follow the
    Wirtinger rule z_j -> d/dzbar_j and zbar_j -> d/dz_j.
    """
    system = P.system
    g = system.group(group)
    gsids = frozenset(g.sym_ids)
    T = conjugate(P)
    total = SparsePolynomial.zero(system)
    for mono, c in T.terms.items():
        D = Q
        rest = []
        for sid, e in mono:
            if sid in gsids:
                d = system.conj_sid(sid) if g.is_complex else sid
                for _ in range(e):
                    D = D.partial_sid(d)
                    if D.is_zero:
                        break
                if D.is_zero:
                    break
            else:
                rest.append((sid, e))
        if D.is_zero:
            continue
        factor = SparsePolynomial(system, {tuple(rest): c}, _normalized=True)
        total = total + factor * D
    return restrict_zero(total, group)


# -- sphere means -------------------------------------------------------------------


def sphere_mean(P: SparsePolynomial, group: str) -> SparsePolynomial:
    """Normalized mean over the unit sphere of `group`, exactly.

    Real group of length m: a monomial x^(2a) averages to
    prod_j (1/2)_{a_j} / (m/2)_{|a|}; odd exponents average to zero.
    Complex group of length N (sphere in R^(2N)): z^a zbar^b averages to
    a! / (N)_{|a|} when a = b and to zero otherwise.  Both are the closed
    forms of the Pizzetti series sum_j Delta^j / (4^j j! (m/2)_j) at 0,
    which sphere_mean_series evaluates literally.
    """
    system = P.system
    g = system.group(group)
    out: dict = {}
    half = Fraction(1, 2)
    if g.is_complex:
        N = g.length
        idx_of = system.info
        gsids = frozenset(g.sym_ids)
        for m, c in P.terms.items():
            gpart = []
            rest = []
            for s, e in m:
                (gpart if s in gsids else rest).append((s, e))
            ok = True
            acc_num = 1
            total = 0
            seen = {}
            for s, e in gpart:
                _, _, idx, bar = idx_of(s)
                a, b = seen.get(idx, (0, 0))
                seen[idx] = (a + (0 if bar else e), b + (e if bar else 0))
            for idx, (a, b) in seen.items():
                if a != b:
                    ok = False
                    break
                acc_num *= factorial(a)
                total += a
            if not ok:
                continue
            w = Fraction(acc_num) / pochhammer(N, total) if total else Fraction(1)
            _accumulate(out, tuple(rest), c * w)
        return SparsePolynomial(system, out, _normalized=True)
    mdim = g.length
    gsids = frozenset(g.sym_ids)
    for m, c in P.terms.items():
        gpart = []
        rest = []
        for s, e in m:
            (gpart if s in gsids else rest).append((s, e))
        w = Fraction(1)
        total = 0
        ok = True
        for _, e in gpart:
            if e % 2:
                ok = False
                break
            w *= pochhammer(half, e // 2)
            total += e // 2
        if not ok:
            continue
        if total:
            w /= pochhammer(Fraction(mdim, 2), total)
        _accumulate(out, tuple(rest), c * w)
    return SparsePolynomial(system, out, _normalized=True)


def sphere_mean_series(P: SparsePolynomial, group: str) -> SparsePolynomial:
    """Literal Pizzetti series: sum_j Delta^j P / (4^j j! (m/2)_j) at group=0.

    On complex groups the real Laplacian (= 4 Delta_z) and m = 2N are used.
    Finite because P is a polynomial.  Kept as the independent oracle for
    sphere_mean.
    """
    system = P.system
    g = system.group(group)
    mdim = 2 * g.length if g.is_complex else g.length
    ctx = OperatorContext(system, group)
    total = SparsePolynomial.zero(system)
    current = P
    j = 0
    while not current.is_zero:
        c = Fraction(1)
        if j:
            c = Fraction(1, 4 ** j * factorial(j)) / pochhammer(Fraction(mdim, 2), j)
        total = total + restrict_zero(current, group).scale(c)
        current = laplacian(current, ctx, "real")
        j += 1
    return total


def spherical_inner(P: SparsePolynomial, Q: SparsePolynomial,
                    group: str) -> SparsePolynomial:
    """Spherical L2 inner product: sphere_mean(conj(P) * Q) over `group`.

    Parameters in other groups pass through, so the result is a polynomial
    (a scalar constant when none remain).
    """
    return sphere_mean(conjugate(P) * Q, group)
