"""Exact sparse multivariate polynomials over a VariableSystem.

Terms are stored as a dict mapping monomials to ExactScalar coefficients.
A monomial is a tuple of (symbol_id, exponent) pairs sorted by symbol id,
with no zero exponents; the empty tuple is the constant monomial.  Zero
coefficients are never stored, so equality is plain term-map equality.
All operations are exact; nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    HomogeneityError,
    KindMismatchError,
    SystemMismatchError,
    UnknownSymbolError,
)
from .scalars import ONE, ExactScalar
from .variables import VariableSystem

Mono = tuple  # tuple[tuple[int, int], ...]

EMPTY_MONO: Mono = ()

# degree_profile sentinels
INHOMOGENEOUS = "inhomogeneous"
EVERY_DEGREE = "every-degree"  # the zero polynomial is homogeneous of every degree


def mono_mul(a: Mono, b: Mono) -> Mono:
    """Merge two sorted exponent tuples (product of monomials)."""
    if not a:
        return b
    if not b:
        return a
    out = []
    ia = ib = 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        sa, ea = a[ia]
        sb, eb = b[ib]
        if sa == sb:
            out.append((sa, ea + eb))
            ia += 1
            ib += 1
        elif sa < sb:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


class SparsePolynomial:
    __slots__ = ("system", "terms")

    def __init__(self, system: VariableSystem, terms=None, _normalized=False):
        self.system = system
        if terms is None:
            self.terms = {}
        elif _normalized:
            self.terms = terms
        else:
            self.terms = {m: c for m, c in dict(terms).items() if c}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, system: VariableSystem) -> "SparsePolynomial":
        return cls(system, {}, _normalized=True)

    @classmethod
    def constant(cls, system: VariableSystem, value) -> "SparsePolynomial":
        c = value if isinstance(value, ExactScalar) else ExactScalar(value)
        return cls(system, {EMPTY_MONO: c} if c else {}, _normalized=True)

    @classmethod
    def symbol(cls, system: VariableSystem, name: str, idx: int,
               bar: bool = False) -> "SparsePolynomial":
        sid = system.symbol_id(name, idx, bar)
        return cls(system, {((sid, 1),): ONE}, _normalized=True)

    @classmethod
    def from_sid(cls, system: VariableSystem, sid: int) -> "SparsePolynomial":
        return cls(system, {((sid, 1),): ONE}, _normalized=True)

    # -- predicates -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.system == other.system and self.terms == other.terms

    def __hash__(self):
        return hash((self.system, frozenset(self.terms.items())))

    def constant_value(self) -> ExactScalar:
        """The scalar value of a constant polynomial."""
        if not self.terms:
            return ExactScalar(0)
        if len(self.terms) == 1 and EMPTY_MONO in self.terms:
            return self.terms[EMPTY_MONO]
        raise HomogeneityError("polynomial is not constant")

    def _check_system(self, other: "SparsePolynomial"):
        if self.system != other.system:
            raise SystemMismatchError("operands live in different variable systems")

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_system(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                s = acc + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return SparsePolynomial(self.system, out, _normalized=True)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_system(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = -c
            else:
                s = acc - c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return SparsePolynomial(self.system, out, _normalized=True)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.system, {m: -c for m, c in self.terms.items()},
                                _normalized=True)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_system(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                acc = get(m)
                if acc is None:
                    out[m] = c
                else:
                    s = acc + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return SparsePolynomial(self.system, out, _normalized=True)

    def scale(self, value) -> "SparsePolynomial":
        c0 = value if isinstance(value, ExactScalar) else ExactScalar(value)
        if not c0:
            return SparsePolynomial.zero(self.system)
        return SparsePolynomial(self.system,
                                {m: c * c0 for m, c in self.terms.items()},
                                _normalized=True)

    def __pow__(self, e: int) -> "SparsePolynomial":
        return power(self, e)

    # -- calculus / structure ------------------------------------------------

    def partial_sid(self, sid: int) -> "SparsePolynomial":
        out = {}
        for m, c in self.terms.items():
            for i, (s, e) in enumerate(m):
                if s == sid:
                    nm = m[:i] + m[i + 1:] if e == 1 else m[:i] + ((s, e - 1),) + m[i + 1:]
                    nc = c * e
                    acc = out.get(nm)
                    if acc is None:
                        out[nm] = nc
                    else:
                        s2 = acc + nc
                        if s2:
                            out[nm] = s2
                        else:
                            del out[nm]
                    break
                if s > sid:
                    break
        return SparsePolynomial(self.system, out, _normalized=True)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(mono_degree(m) for m in self.terms)

    def group_sids(self, group: str) -> frozenset:
        return frozenset(self.system.group(group).sym_ids)

    def uses_only(self, group: str) -> bool:
        sids = self.group_sids(group)
        return all(s in sids for m in self.terms for s, _ in m)

    def split_by_group(self, group: str):
        """Group terms by their part in `group`.

        Returns dict: group-monomial -> dict of (remaining monomial -> coeff).
        """
        sids = self.group_sids(group)
        out: dict = {}
        for m, c in self.terms.items():
            gpart = tuple((s, e) for s, e in m if s in sids)
            rest = tuple((s, e) for s, e in m if s not in sids)
            out.setdefault(gpart, {})[rest] = c
        return out

    def coefficient_poly(self, group_mono: Mono, group: str) -> "SparsePolynomial":
        """Polynomial coefficient of an exact monomial of `group`."""
        sids = self.group_sids(group)
        out = {}
        for m, c in self.terms.items():
            gpart = tuple((s, e) for s, e in m if s in sids)
            if gpart == group_mono:
                out[tuple((s, e) for s, e in m if s not in sids)] = c
        return SparsePolynomial(self.system, out, _normalized=True)


# -- module-level operations (the spec surface) --------------------------------


def combine(a: SparsePolynomial, b: SparsePolynomial, op: str) -> SparsePolynomial:
    """Exact ring operation: op is one of 'add' | 'sub' | 'mul'."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def power(a: SparsePolynomial, e: int) -> SparsePolynomial:
    """Exact power by repeated squaring; power(a, 0) = 1."""
    if not isinstance(e, int) or e < 0:
        raise ValueError("exponent must be a non-negative integer")
    result = SparsePolynomial.constant(a.system, 1)
    base = a
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def partial(a: SparsePolynomial, name: str, idx: int, bar: bool = False) -> SparsePolynomial:
    """Formal partial derivative; z and zbar are independent (Wirtinger)."""
    sid = a.system.symbol_id(name, idx, bar)
    return a.partial_sid(sid)


def conjugate(a: SparsePolynomial) -> SparsePolynomial:
    """Complex conjugation: conjugates coefficients, swaps z[i] <-> zbar[i]."""
    system = a.system
    conj_sid = system.conj_sid
    out = {}
    for m, c in a.terms.items():
        nm = tuple(sorted((conj_sid(s), e) for s, e in m))
        out[nm] = c.conjugate()
    return SparsePolynomial(system, out, _normalized=True)


def restrict_zero(a: SparsePolynomial, group: str) -> SparsePolynomial:
    """Substitute 0 for every symbol of `group` (both z and zbar families)."""
    sids = a.group_sids(group)
    out = {m: c for m, c in a.terms.items() if not any(s in sids for s, _ in m)}
    return SparsePolynomial(a.system, out, _normalized=True)


def degree_profile(a: SparsePolynomial, group: str):
    """Homogeneity of `a` in the symbols of `group`.

    Real group: the common degree as an int.  Complex group: the common
    bidegree (p, q) with p the z-degree and q the zbar-degree.  Returns
    INHOMOGENEOUS when term degrees differ, and EVERY_DEGREE for the zero
    polynomial (which is homogeneous of every degree).
    """
    g = a.system.group(group)
    if a.is_zero:
        return EVERY_DEGREE
    if g.is_complex:
        unb = frozenset(g.unbarred)
        bar = frozenset(g.barred)
        profile = None
        for m in a.terms:
            p = sum(e for s, e in m if s in unb)
            q = sum(e for s, e in m if s in bar)
            if profile is None:
                profile = (p, q)
            elif profile != (p, q):
                return INHOMOGENEOUS
        return profile
    sids = frozenset(g.sym_ids)
    deg = None
    for m in a.terms:
        d = sum(e for s, e in m if s in sids)
        if deg is None:
            deg = d
        elif deg != d:
            return INHOMOGENEOUS
    return deg


def substitute(a: SparsePolynomial, mapping: dict) -> SparsePolynomial:
    """Substitute polynomials for symbols: mapping is {sid: SparsePolynomial}.

    Symbols not in the mapping are left alone.  Used for linear changes of
    variables (rotations, real/complex coordinate changes).
    """
    system = a.system
    pow_cache: dict = {}

    def sym_power(sid: int, e: int) -> SparsePolynomial:
        key = (sid, e)
        hit = pow_cache.get(key)
        if hit is None:
            base = mapping.get(sid)
            if base is None:
                hit = SparsePolynomial(system, {((sid, e),): ONE}, _normalized=True)
            else:
                if base.system != system:
                    raise SystemMismatchError("substitution image in wrong system")
                hit = power(base, e)
            pow_cache[key] = hit
        return hit

    total = SparsePolynomial.zero(system)
    for m, c in a.terms.items():
        piece = SparsePolynomial.constant(system, c)
        for sid, e in m:
            piece = piece * sym_power(sid, e)
        total = total + piece
    return total


def _group_perm(system: VariableSystem, src: str, dst: str) -> dict:
    gs, gd = system.group(src), system.group(dst)
    if (gs.length, gs.kind) != (gd.length, gd.kind):
        raise KindMismatchError(f"groups {src!r} and {dst!r} have different shape")
    perm = {}
    for a, b in zip(gs.sym_ids, gd.sym_ids):
        perm[a] = b
    return perm


def rename_group(a: SparsePolynomial, src: str, dst: str) -> SparsePolynomial:
    """Move a polynomial's `src` symbols onto `dst` (same length and kind)."""
    perm = _group_perm(a.system, src, dst)
    out = {}
    for m, c in a.terms.items():
        nm = tuple(sorted((perm.get(s, s), e) for s, e in m))
        if nm in out:
            raise UnknownSymbolError(f"rename collides on {dst!r}; polynomial already uses it")
        out[nm] = c
    return SparsePolynomial(a.system, out, _normalized=True)


def swap_groups(a: SparsePolynomial, g1: str, g2: str) -> SparsePolynomial:
    """Exchange two groups of identical shape."""
    perm = _group_perm(a.system, g1, g2)
    perm.update({v: k for k, v in perm.items()})
    out = {}
    for m, c in a.terms.items():
        nm = tuple(sorted((perm.get(s, s), e) for s, e in m))
        out[nm] = c
    return SparsePolynomial(a.system, out, _normalized=True)


# -- canonical ordering ---------------------------------------------------------


def canonical_key(m: Mono):
    """Graded order, then lexicographic on exponents in canonical symbol order.

    Sorting ascending by this key lists the leading term first: higher total
    degree wins, then the lexicographically greater exponent vector.
    """
    return (-mono_degree(m), tuple((s, -e) for s, e in m))


def canonical_terms(a: SparsePolynomial):
    return sorted(a.terms.items(), key=lambda kv: canonical_key(kv[0]))


def scalar_from_fraction(x) -> ExactScalar:
    return x if isinstance(x, ExactScalar) else ExactScalar(Fraction(x))
