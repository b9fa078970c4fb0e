from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from harmonic_kernels import ExactScalar, SparsePolynomial, VariableSystem

MIXED = VariableSystem([("x", 2, "real"), ("z", 2, "complex")])


@pytest.fixture
def mixed_system():
    return MIXED


def scalars():
    frac = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    return st.builds(ExactScalar, frac, frac)


@st.composite
def polynomials(draw, system=MIXED, max_terms=4, max_exp=3):
    sids = st.integers(0, system.n_symbols - 1)
    exps = st.integers(1, max_exp)
    nterms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(nterms):
        width = draw(st.integers(0, 3))
        mono = {}
        for _ in range(width):
            mono[draw(sids)] = draw(exps)
        coeff = draw(scalars())
        if coeff:
            terms[tuple(sorted(mono.items()))] = coeff
    return SparsePolynomial(system, terms)


@st.composite
def nonzero_polynomials(draw, system=MIXED):
    p = draw(polynomials(system=system))
    if p.is_zero:
        p = p + SparsePolynomial.constant(system, Fraction(1, 2))
    return p
